#include "ulab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace ulab {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorKind::kInvalidParameter, "negative vertex count");
  }
  incidence_.assign(static_cast<std::size_t>(vertex_count_), {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw Error(ErrorKind::kVertexOutOfRange,
                  "edge " + std::to_string(i) + " has an endpoint outside 0.." +
                      std::to_string(vertex_count_ - 1));
    }
    if (u == v) {
      throw Error(ErrorKind::kLoop, "edge " + std::to_string(i) + " is a loop at " +
                                        std::to_string(u));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorKind::kDuplicateEdge, "edge {" + std::to_string(u) + "," +
                                                 std::to_string(v) + "} appears twice");
    }
    incidence_[static_cast<std::size_t>(u)].push_back(static_cast<EdgeId>(i));
    incidence_[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(i));
  }
  for (const auto& inc : incidence_) {
    max_degree_ = std::max(max_degree_, static_cast<int>(inc.size()));
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= vertex_count_) return std::nullopt;
  for (EdgeId e : incident(a)) {
    if (other(e, a) == b) return e;
  }
  return std::nullopt;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(incident(v).size());
  for (EdgeId e : incident(v)) out.push_back(other(e, v));
  return out;
}

bool Graph::is_connected() const {
  if (vertex_count_ == 0) return true;
  const auto depth = bfs_levels(*this, 0);
  return std::none_of(depth.begin(), depth.end(), [](int d) { return d == kUnreachable; });
}

bool Graph::is_tree() const {
  return vertex_count_ >= 1 && edge_count() == vertex_count_ - 1 && is_connected();
}

bool Graph::is_regular(int degree) const {
  return std::all_of(incidence_.begin(), incidence_.end(),
                     [degree](const auto& inc) { return static_cast<int>(inc.size()) == degree; });
}

Graph without_edge(const Graph& g, EdgeId e) {
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i != e) edges.push_back(g.edge(i));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(g.edge(e));
  return Graph(g.vertex_count(), std::move(out));
}

Orientation::Orientation(const Graph& g, std::vector<Vertex> heads) : heads_(std::move(heads)) {
  if (static_cast<int>(heads_.size()) != g.edge_count()) {
    throw Error(ErrorKind::kInvalidParameter, "orientation size does not match edge count");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (heads_[static_cast<std::size_t>(e)] != ed.u && heads_[static_cast<std::size_t>(e)] != ed.v) {
      throw Error(ErrorKind::kInvalidParameter,
                  "head of edge " + std::to_string(e) + " is not one of its endpoints");
    }
  }
}

Orientation Orientation::from_mask(const Graph& g, std::uint64_t mask) {
  std::vector<Vertex> heads(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    heads[static_cast<std::size_t>(e)] = ((mask >> e) & 1U) ? ed.v : ed.u;
  }
  return Orientation(g, std::move(heads));
}

EdgeLabeling::EdgeLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (Label x : labels_) {
    if (x < 1) throw Error(ErrorKind::kInvalidParameter, "labels must be positive");
  }
}

Label EdgeLabeling::at(EdgeId e) const {
  const Label x = labels_.at(static_cast<std::size_t>(e));
  if (x == 0) {
    throw Error(ErrorKind::kPartialLabeling, "edge " + std::to_string(e) + " has no label");
  }
  return x;
}

void EdgeLabeling::set(EdgeId e, Label label) {
  if (label < 1) throw Error(ErrorKind::kInvalidParameter, "labels must be positive");
  labels_.at(static_cast<std::size_t>(e)) = label;
}

bool EdgeLabeling::is_total() const noexcept {
  return std::find(labels_.begin(), labels_.end(), Label{0}) == labels_.end();
}

Label EdgeLabeling::max_label() const noexcept {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

void require_total(const Graph& g, const EdgeLabeling& l) {
  if (l.size() != g.edge_count() || !l.is_total()) {
    throw Error(ErrorKind::kPartialLabeling, "labeling is not total on the graph");
  }
}

std::vector<int> bfs_levels(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.vertex_count()) {
    throw Error(ErrorKind::kVertexOutOfRange, "bfs root " + std::to_string(root) + " out of range");
  }
  std::vector<int> depth(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<Vertex> queue{root};
  depth[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      const Vertex y = g.other(e, x);
      if (depth[static_cast<std::size_t>(y)] == kUnreachable) {
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return depth;
}

}  // namespace ulab
