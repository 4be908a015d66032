#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/graph.hpp"

namespace ulab {

/// A configuration certifying that some orientation gives an edge's two
/// endpoints equal incoming sums: the edges of `into_u` point into u, the
/// edges of `into_v` point into v, and the edge itself points into `head`.
/// Every other edge at u or v points away from them.
struct Witness {
  EdgeId edge = -1;
  std::vector<EdgeId> into_u;
  std::vector<EdgeId> into_v;
  Vertex head = -1;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class VerifyMethod { kBrute, kLocal };

struct VerificationReport {
  bool universal = true;
  std::optional<Witness> witness;
  VerifyMethod method = VerifyMethod::kLocal;
};

inline constexpr int kDefaultBruteEdgeCap = 20;
inline constexpr int kDefaultLocalDegreeCap = 25;

/// Sum of labels over edges whose head is v, for every vertex v.
std::vector<Label> in_sums(const Graph& g, const EdgeLabeling& l, const Orientation& o);

/// Definitional check over all 2^m orientations, in increasing mask order.
VerificationReport verify_brute(const Graph& g, const EdgeLabeling& l,
                                int max_edges = kDefaultBruteEdgeCap);

/// Per-edge criterion. For e = {u,v} let A range over subsets of the other
/// edges at u and B over subsets of the other edges at v; these two edge sets
/// are disjoint in a simple graph, so every pair (A, B) together with either
/// direction of e is realised by some orientation. The endpoints collide iff
/// sum(B) - sum(A) = l(e) (e into u) or sum(A) - sum(B) = l(e) (e into v).
/// Hence the labeling is universal iff no edge admits such a pair.
VerificationReport verify_local(const Graph& g, const EdgeLabeling& l,
                                int max_degree = kDefaultLocalDegreeCap);

/// The per-edge criterion for one edge. Only labeled incident edges take part,
/// so on a partial labeling a witness is already a witness for every
/// completion. Requires e itself to be labeled.
std::optional<Witness> find_edge_witness(const Graph& g, const EdgeLabeling& l, EdgeId e);

/// Expands a witness to a full orientation: witness edges as recorded, other
/// edges at the witness endpoints pointing away, everything else u -> v.
Orientation witness_orientation(const Graph& g, const Witness& w);

bool is_proper_edge_coloring(const Graph& g, const EdgeLabeling& l);

/// True iff no sum of two or more members equals a member. Duplicates are
/// collapsed.
bool is_sum_free(std::span<const Label> values);

/// Labels at the edges incident to v (total labeling).
std::vector<Label> labels_at(const Graph& g, const EdgeLabeling& l, Vertex v);

std::string_view to_string(VerifyMethod m);
nlohmann::json to_json(const Graph& g, const VerificationReport& report);

}  // namespace ulab
