#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ulab/error.hpp"

namespace ulab {

using Vertex = int;
using EdgeId = int;
using Label = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with densely indexed edges.
///
/// Edge indices follow construction order and never change. Construction
/// rejects loops, duplicate pairs and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edge ids of v, in increasing edge-index order.
  std::span<const EdgeId> incident(Vertex v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const noexcept { return max_degree_; }

  /// Endpoint of e that is not v.
  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  bool is_connected() const;
  bool is_tree() const;
  bool is_regular(int degree) const;

 private:
  int vertex_count_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Same vertex set, edge e removed, remaining edges keep their relative order.
Graph without_edge(const Graph& g, EdgeId e);

/// Spanning subgraph on the same vertices using only the listed edges (in the
/// given order).
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// Direction of every edge, stored as the head vertex.
class Orientation {
 public:
  Orientation(const Graph& g, std::vector<Vertex> heads);

  /// Bit e of mask set means edge e points u -> v, clear means v -> u.
  static Orientation from_mask(const Graph& g, std::uint64_t mask);

  Vertex head(EdgeId e) const { return heads_.at(static_cast<std::size_t>(e)); }
  std::span<const Vertex> heads() const noexcept { return heads_; }

 private:
  std::vector<Vertex> heads_;
};

/// Map edge id -> positive label; entries may be absent while a labeling is
/// under construction.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  explicit EdgeLabeling(int edge_count) : labels_(static_cast<std::size_t>(edge_count), 0) {}
  explicit EdgeLabeling(std::vector<Label> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  bool has(EdgeId e) const { return labels_.at(static_cast<std::size_t>(e)) != 0; }
  Label at(EdgeId e) const;
  void set(EdgeId e, Label label);
  void clear(EdgeId e) { labels_.at(static_cast<std::size_t>(e)) = 0; }
  bool is_total() const noexcept;
  Label max_label() const noexcept;

  /// Raw storage, 0 marks an absent label.
  std::span<const Label> raw() const noexcept { return labels_; }

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

 private:
  std::vector<Label> labels_;
};

/// Throws kPartialLabeling unless l is total and sized for g.
void require_total(const Graph& g, const EdgeLabeling& l);

inline constexpr int kUnreachable = -1;

/// Distance from root for every vertex, kUnreachable outside root's component.
std::vector<int> bfs_levels(const Graph& g, Vertex root);

// Edge-list text format.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

// Labeling text format: `u v label` per line, every line names an edge of g.
EdgeLabeling parse_labeling(std::string_view text, const Graph& g);
std::string render_labeling(const Graph& g, const EdgeLabeling& l);
EdgeLabeling read_labeling_file(const std::string& path, const Graph& g);

/// Deterministic (or seeded) graph from a descriptor such as `cycle:5`,
/// `complete_bipartite:3,3` or `random_tree:50:4:7`.
Graph generate(std::string_view descriptor);

struct CatalogEntry {
  std::string name;
  std::string descriptor;
};

/// Named graph lists for batch reports. Currently only "small".
std::vector<CatalogEntry> catalog(std::string_view name);

}  // namespace ulab
