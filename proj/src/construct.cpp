#include "ulab/construct.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ulab/verify.hpp"

namespace ulab {
namespace {

EdgeLabeling map_colors(const EdgeColoring& coloring, std::span<const Label> labels_by_color) {
  EdgeLabeling l(static_cast<int>(coloring.color.size()));
  for (std::size_t e = 0; e < coloring.color.size(); ++e) {
    l.set(static_cast<EdgeId>(e), labels_by_color[static_cast<std::size_t>(coloring.color[e] - 1)]);
  }
  return l;
}

bool verified_universal(const Graph& g, const EdgeLabeling& l) {
  return verify_local(g, l, std::numeric_limits<int>::max()).universal;
}

RegularLabelingResult regular_labeling(const Graph& g, int degree, std::span<const Label> labels,
                                       int exact_number, std::uint64_t budget) {
  if (g.vertex_count() == 0 || !g.is_regular(degree)) {
    throw Error(ErrorKind::kNotRegular, "input is not " + std::to_string(degree) + "-regular");
  }
  RegularLabelingResult out;
  const auto chromatic = exact_chromatic_index(g, budget);
  switch (chromatic.verdict) {
    case EdgeClass::kClass1:
      out.status = RegularStatus::kLabeled;
      out.labeling = map_colors(*chromatic.coloring, labels);
      out.verified = verified_universal(g, *out.labeling);
      if (out.verified) out.exact_number = exact_number;
      break;
    case EdgeClass::kClass2:
      out.status = RegularStatus::kClass2;
      out.exceeds = exact_number;
      break;
    case EdgeClass::kUnknown:
      out.status = RegularStatus::kUnknown;
      break;
  }
  return out;
}

std::uint64_t bit(Label x) { return std::uint64_t{1} << (x - 1); }

// Branch and bound for one palette size k.
class UniversalSearch {
 public:
  UniversalSearch(const Graph& g, int k, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g),
        k_(k),
        nodes_(nodes),
        budget_(budget),
        labeling_(g.edge_count()),
        present_(static_cast<std::size_t>(g.vertex_count()), 0) {
    order_.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(order_.begin(), order_.end(), 0);
    auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
    admissible_.resize(static_cast<std::size_t>(g.max_degree() + 1));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      auto& masks = admissible_[static_cast<std::size_t>(d)];
      if (d == 0 || !masks.empty() || d > k) continue;
      for (const auto& set : admissible_vertex_sets(d, k)) {
        std::uint64_t mask = 0;
        for (Label x : set) mask |= bit(x);
        masks.push_back(mask);
      }
    }
  }

  // True when found; labeling() then holds the lexicographically least witness.
  bool run() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (g_.degree(v) > 0 && admissible_[static_cast<std::size_t>(g_.degree(v))].empty()) {
        return false;
      }
    }
    return search(0);
  }

  bool exhausted() const { return exhausted_; }
  const EdgeLabeling& labeling() const { return labeling_; }

 private:
  bool admissible(Vertex v) const {
    const std::uint64_t have = present_[static_cast<std::size_t>(v)];
    const auto& masks = admissible_[static_cast<std::size_t>(g_.degree(v))];
    return std::any_of(masks.begin(), masks.end(),
                       [have](std::uint64_t m) { return (m & have) == have; });
  }

  bool no_local_collision(EdgeId e) const {
    for (const Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
      for (EdgeId f : g_.incident(x)) {
        if (labeling_.has(f) && find_edge_witness(g_, labeling_, f)) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const EdgeId e = order_[depth];
    const auto u = static_cast<std::size_t>(g_.edge(e).u);
    const auto v = static_cast<std::size_t>(g_.edge(e).v);
    for (Label x = 1; x <= k_; ++x) {
      if ((present_[u] | present_[v]) & bit(x)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      labeling_.set(e, x);
      present_[u] |= bit(x);
      present_[v] |= bit(x);
      if (admissible(g_.edge(e).u) && admissible(g_.edge(e).v) && no_local_collision(e) &&
          search(depth + 1)) {
        return true;
      }
      present_[u] &= ~bit(x);
      present_[v] &= ~bit(x);
      labeling_.clear(e);
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  EdgeLabeling labeling_;
  std::vector<std::uint64_t> present_;
  std::vector<EdgeId> order_;
  std::vector<std::vector<std::uint64_t>> admissible_;  // by degree
  bool exhausted_ = false;
};

}  // namespace

EdgeLabeling power_of_two_labeling(const Graph& g, std::uint64_t budget) {
  if (g.max_degree() > 62) {
    throw Error(ErrorKind::kCapExceeded, "power-of-two labels overflow above max degree 62");
  }
  auto exact = exact_chromatic_index(g, budget);
  const EdgeColoring coloring =
      exact.verdict == EdgeClass::kClass1 ? std::move(*exact.coloring) : color_delta_plus_one(g);
  EdgeLabeling l(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    l.set(e, Label{1} << (coloring.color[static_cast<std::size_t>(e)] - 1));
  }
  return l;
}

LabeledGraph star_labeling(int m) {
  if (m < 1) throw Error(ErrorKind::kInvalidParameter, "star needs m >= 1");
  Graph g = generate("star:" + std::to_string(m));
  EdgeLabeling l = star_labeling(g);
  return {std::move(g), std::move(l)};
}

EdgeLabeling star_labeling(const Graph& star) {
  const int m = star.edge_count();
  std::optional<Vertex> center;
  for (Vertex v = 0; v < star.vertex_count() && m > 0; ++v) {
    if (star.degree(v) == m) {
      center = v;
      break;
    }
  }
  if (!center) throw Error(ErrorKind::kInvalidParameter, "graph is not a star K_{1,m}");
  EdgeLabeling l(m);
  for (EdgeId e = 0; e < m; ++e) l.set(e, std::max<Label>(1, m - 1 + e));
  return l;
}

Label tree_level_sum(int max_degree) {
  return Label{3} * max_degree * (max_degree - 1) / 2;
}

TreeLabeling tree_labeling(const Graph& t, std::optional<Vertex> root,
                           std::optional<Label> multiplier) {
  if (!t.is_tree() || t.edge_count() == 0) {
    throw Error(ErrorKind::kNotATree, "tree labeling needs a tree with at least one edge");
  }
  const int delta = t.max_degree();
  TreeLabeling out;
  TreeLabelingPlan& plan = out.plan;
  if (root) {
    plan.root = *root;
  } else {
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      if (t.degree(v) == delta) {
        plan.root = v;
        break;
      }
    }
  }
  plan.coloring = tree_edge_coloring(t, plan.root);
  plan.depths = bfs_levels(t, plan.root);
  plan.multiplier = multiplier.value_or(tree_level_sum(delta) + 1);
  if (plan.multiplier < 1) throw Error(ErrorKind::kInvalidParameter, "multiplier must be positive");

  out.labeling = EdgeLabeling(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    const int c = plan.coloring.color[static_cast<std::size_t>(e)];
    // A single edge has delta = 1 and would get N = 0.
    const Label n = delta == 1 ? 1 : c + delta - 2;
    const int upper = std::min(plan.depths[static_cast<std::size_t>(ed.u)],
                               plan.depths[static_cast<std::size_t>(ed.v)]);
    const LevelParity parity = upper % 2 == 0 ? LevelParity::kEven : LevelParity::kOdd;
    plan.n_value.push_back(n);
    plan.parity.push_back(parity);
    out.labeling.set(e, parity == LevelParity::kEven ? n : n * plan.multiplier);
  }
  return out;
}

RegularLabelingResult cubic_labeling(const Graph& g, std::uint64_t budget) {
  static constexpr Label kLabels[] = {1, 2, 4};
  return regular_labeling(g, 3, kLabels, 4, budget);
}

RegularLabelingResult quartic_labeling(const Graph& g, std::uint64_t budget) {
  static constexpr Label kLabels[] = {3, 5, 6, 7};
  return regular_labeling(g, 4, kLabels, 7, budget);
}

std::vector<std::vector<Label>> admissible_vertex_sets(int d, int k, const AdmissibleOptions& options) {
  if (d < 1 || d > k) throw Error(ErrorKind::kInvalidParameter, "need 1 <= d <= k");
  if (k > 62) throw Error(ErrorKind::kCapExceeded, "palette too large for subset enumeration");
  std::vector<std::vector<Label>> out;
  std::vector<Label> set(static_cast<std::size_t>(d));
  std::iota(set.begin(), set.end(), Label{1});

  auto passes_pair_filter = [&](const std::vector<Label>& s, Label top) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        for (std::size_t c = 0; c < s.size(); ++c) {
          if (c != a && c != b && s[a] + s[b] == s[c] + top) return false;
        }
      }
    }
    return true;
  };

  while (true) {
    const bool has_required =
        !options.require_element ||
        std::find(set.begin(), set.end(), *options.require_element) != set.end();
    if (has_required && is_sum_free(set) &&
        (!options.pair_filter_max || passes_pair_filter(set, *options.pair_filter_max))) {
      out.push_back(set);
    }
    // Next combination in lexicographic order.
    int i = d - 1;
    while (i >= 0 && set[static_cast<std::size_t>(i)] == k - d + 1 + i) --i;
    if (i < 0) break;
    ++set[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

BoundReport lower_bound(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::kInvalidParameter, "graph has no edges");
  const Label delta = g.max_degree();
  BoundReport out;
  if (2 * delta - 2 >= delta) {
    out.lower = 2 * delta - 2;
    out.reasons.push_back("sum-pairs: 2*maxdeg-2");
  } else {
    out.lower = delta;
    out.reasons.push_back("proper-coloring: maxdeg");
  }
  if (delta <= 62) {
    out.upper = Label{1} << delta;
    out.reasons.push_back("powers-of-two: 2^maxdeg");
  } else {
    out.upper = std::numeric_limits<Label>::max();
    out.reasons.push_back("powers-of-two: saturated");
  }
  return out;
}

UniversalNumberResult min_universal_number(const Graph& g, int k_max, std::uint64_t budget) {
  const BoundReport bounds = lower_bound(g);
  UniversalNumberResult out;
  out.lower = static_cast<int>(std::min<Label>(bounds.lower, std::numeric_limits<int>::max()));
  if (bounds.upper <= std::numeric_limits<int>::max()) out.upper = static_cast<int>(bounds.upper);
  if (k_max > 62) throw Error(ErrorKind::kCapExceeded, "k_max above 62 is not supported");

  for (int k = out.lower; k <= k_max; ++k) {
    UniversalSearch search(g, k, out.nodes, budget);
    if (search.run()) {
      if (!verified_universal(g, search.labeling())) {
        throw std::logic_error("branch and bound produced a non-universal labeling");
      }
      out.status = SearchStatus::kExact;
      out.exact = k;
      out.lower = k;
      out.upper = k;
      out.witness = search.labeling();
      return out;
    }
    if (search.exhausted()) {
      out.status = SearchStatus::kBudgetExhausted;
      out.lower = k;
      return out;
    }
    out.lower = k + 1;
  }
  out.status = SearchStatus::kKMaxExceeded;
  return out;
}

nlohmann::json construction_sidecar(const std::string& name, const EdgeLabeling& l, bool verified,
                                    std::optional<int> exact_number) {
  nlohmann::json j;
  j["construction"] = name;
  j["palette_max"] = l.max_label();
  j["verified"] = verified;
  j["exact_number"] = exact_number ? nlohmann::json(*exact_number) : nlohmann::json(nullptr);
  return j;
}

}  // namespace ulab
