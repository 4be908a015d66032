#include "ulab/edge_coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ulab {

EdgeLabeling EdgeColoring::as_labeling() const {
  return EdgeLabeling(std::vector<Label>(color.begin(), color.end()));
}

EdgeColoring tree_edge_coloring(const Graph& t, Vertex root) {
  if (!t.is_tree()) throw Error(ErrorKind::kNotATree, "edge coloring by levels needs a tree");
  if (root < 0 || root >= t.vertex_count()) {
    throw Error(ErrorKind::kVertexOutOfRange, "root " + std::to_string(root) + " out of range");
  }
  EdgeColoring out;
  out.color.assign(static_cast<std::size_t>(t.edge_count()), 0);
  out.palette_size = t.max_degree();
  std::vector<EdgeId> parent_edge(static_cast<std::size_t>(t.vertex_count()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(t.vertex_count()), false);
  std::deque<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    const EdgeId up = parent_edge[static_cast<std::size_t>(x)];
    const int taken = up < 0 ? 0 : out.color[static_cast<std::size_t>(up)];
    int next = 1;
    for (EdgeId e : t.incident(x)) {
      if (e == up) continue;
      if (next == taken) ++next;
      out.color[static_cast<std::size_t>(e)] = next++;
      const Vertex y = t.other(e, x);
      seen[static_cast<std::size_t>(y)] = true;
      parent_edge[static_cast<std::size_t>(y)] = e;
      queue.push_back(y);
    }
  }
  return out;
}

namespace {

class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g),
        palette_(g.max_degree() + 1),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        at_(static_cast<std::size_t>(g.vertex_count()),
            std::vector<EdgeId>(static_cast<std::size_t>(palette_ + 1), -1)) {}

  EdgeColoring run() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) color_edge(e);
    EdgeColoring out;
    out.color = color_;
    out.palette_size = color_.empty() ? 0 : *std::max_element(color_.begin(), color_.end());
    return out;
  }

 private:
  bool is_free(Vertex v, int c) const {
    return at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] < 0;
  }

  int color_of(EdgeId e) const { return color_[static_cast<std::size_t>(e)]; }

  void assign(EdgeId e, int c) {
    const Edge& ed = g_.edge(e);
    if (const int old = color_of(e); old != 0) {
      at_[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(old)] = -1;
      at_[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(old)] = -1;
    }
    color_[static_cast<std::size_t>(e)] = c;
    if (c != 0) {
      at_[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(c)] = e;
      at_[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(c)] = e;
    }
  }

  int free_color(Vertex v) const {
    for (int c = 1; c <= palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw std::logic_error("no free color within max degree + 1");
  }

  EdgeId edge_between(Vertex a, Vertex b) const { return *g_.find_edge(a, b); }

  std::vector<Vertex> maximal_fan(Vertex u, Vertex v) const {
    std::vector<Vertex> fan{v};
    bool extended = true;
    while (extended) {
      extended = false;
      for (EdgeId e : g_.incident(u)) {
        const Vertex w = g_.other(e, u);
        const int c = color_of(e);
        if (c != 0 && is_free(fan.back(), c) && std::find(fan.begin(), fan.end(), w) == fan.end()) {
          fan.push_back(w);
          extended = true;
          break;
        }
      }
    }
    return fan;
  }

  // Swaps colors c and d along the maximal path from u that starts with d.
  void invert_path(Vertex u, int c, int d) {
    std::vector<EdgeId> path;
    Vertex x = u;
    int want = d;
    while (true) {
      const EdgeId e = at_[static_cast<std::size_t>(x)][static_cast<std::size_t>(want)];
      if (e < 0 || (!path.empty() && e == path.back())) break;
      path.push_back(e);
      x = g_.other(e, x);
      want = want == d ? c : d;
    }
    std::vector<int> swapped;
    for (EdgeId e : path) swapped.push_back(color_of(e) == d ? c : d);
    for (EdgeId e : path) assign(e, 0);
    for (std::size_t i = 0; i < path.size(); ++i) assign(path[i], swapped[i]);
  }

  bool is_fan_prefix(Vertex u, const std::vector<Vertex>& fan, std::size_t end) const {
    for (std::size_t j = 0; j < end; ++j) {
      const int c = color_of(edge_between(u, fan[j + 1]));
      if (c == 0 || !is_free(fan[j], c)) return false;
    }
    return true;
  }

  void color_edge(EdgeId e) {
    const Vertex u = g_.edge(e).u;
    const Vertex v = g_.edge(e).v;
    const auto fan = maximal_fan(u, v);
    const int c = free_color(u);
    const int d = free_color(fan.back());
    if (c != d) invert_path(u, c, d);

    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (is_free(fan[i], d) && is_fan_prefix(u, fan, i)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("Misra-Gries: no rotatable fan prefix");

    std::vector<EdgeId> fan_edges;
    std::vector<int> rotated;
    for (std::size_t j = 0; j <= w; ++j) fan_edges.push_back(edge_between(u, fan[j]));
    for (std::size_t j = 0; j < w; ++j) rotated.push_back(color_of(fan_edges[j + 1]));
    rotated.push_back(d);
    for (EdgeId f : fan_edges) assign(f, 0);
    for (std::size_t j = 0; j <= w; ++j) assign(fan_edges[j], rotated[j]);
  }

  const Graph& g_;
  int palette_;
  std::vector<int> color_;
  std::vector<std::vector<EdgeId>> at_;
};

class ExactColoring {
 public:
  ExactColoring(const Graph& g, std::uint64_t budget)
      : g_(g),
        budget_(budget),
        palette_(g.max_degree()),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        used_(static_cast<std::size_t>(g.vertex_count()), 0) {
    order_.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(order_.begin(), order_.end(), 0);
    auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
  }

  ChromaticIndexResult run() {
    ChromaticIndexResult out;
    const bool found = search(0);
    out.nodes = nodes_;
    if (found) {
      out.verdict = EdgeClass::kClass1;
      out.coloring = EdgeColoring{color_, palette_};
    } else {
      out.verdict = exhausted_ ? EdgeClass::kUnknown : EdgeClass::kClass2;
    }
    return out;
  }

 private:
  std::uint64_t& used(Vertex v) { return used_[static_cast<std::size_t>(v)]; }

  std::uint64_t domain(EdgeId e) {
    const std::uint64_t all = (std::uint64_t{1} << palette_) - 1;
    return all & ~(used(g_.edge(e).u) | used(g_.edge(e).v));
  }

  bool forward_ok(Vertex x) {
    for (EdgeId f : g_.incident(x)) {
      if (color_[static_cast<std::size_t>(f)] == 0 && domain(f) == 0) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const EdgeId e = order_[depth];
    const Vertex u = g_.edge(e).u;
    const Vertex v = g_.edge(e).v;
    const std::uint64_t options = domain(e);
    for (int c = 1; c <= palette_; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if (!(options & bit)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      color_[static_cast<std::size_t>(e)] = c;
      used(u) |= bit;
      used(v) |= bit;
      if (forward_ok(u) && forward_ok(v) && search(depth + 1)) return true;
      used(u) &= ~bit;
      used(v) &= ~bit;
      color_[static_cast<std::size_t>(e)] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  int palette_;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
  std::vector<EdgeId> order_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

EdgeColoring color_delta_plus_one(const Graph& g) { return MisraGries(g).run(); }

ChromaticIndexResult exact_chromatic_index(const Graph& g, std::uint64_t budget) {
  if (g.max_degree() > 63) {
    throw Error(ErrorKind::kCapExceeded, "exact edge coloring supports max degree <= 63");
  }
  return ExactColoring(g, budget).run();
}

}  // namespace ulab
