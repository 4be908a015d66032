#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/edge_coloring.hpp"
#include "ulab/graph.hpp"

namespace ulab {

struct LabeledGraph {
  Graph graph;
  EdgeLabeling labeling;
};

/// l(e) = 2^(c(e)-1) for an exact max-degree coloring when the search resolves
/// within budget, otherwise for the Misra-Gries coloring.
EdgeLabeling power_of_two_labeling(const Graph& g,
                                   std::uint64_t budget = kDefaultColoringBudget);

/// K_{1,m} with edge i labeled m-1+i.
LabeledGraph star_labeling(int m);

/// Same labels for an arbitrary graph that is a star: center of degree m,
/// every other vertex a leaf. Edge order is the graph's.
EdgeLabeling star_labeling(const Graph& star);

enum class LevelParity { kEven, kOdd };

/// Everything the level construction on trees derives from the input.
struct TreeLabelingPlan {
  Vertex root = 0;
  std::vector<int> depths;
  EdgeColoring coloring;
  std::vector<Label> n_value;         // c(e) + max_degree - 2
  std::vector<LevelParity> parity;    // by depth of the upper endpoint
  Label multiplier = 1;
};

struct TreeLabeling {
  EdgeLabeling labeling;
  TreeLabelingPlan plan;
};

/// (3/2) * d * (d - 1): the sum of every possible N value at one vertex.
Label tree_level_sum(int max_degree);

/// Even-level edges carry N(e), odd-level edges N(e) * M with
/// M = tree_level_sum(max_degree) + 1 unless overridden. The default root is
/// the smallest-index vertex of maximum degree.
TreeLabeling tree_labeling(const Graph& t, std::optional<Vertex> root = std::nullopt,
                           std::optional<Label> multiplier = std::nullopt);

enum class RegularStatus { kLabeled, kClass2, kUnknown };

struct RegularLabelingResult {
  RegularStatus status = RegularStatus::kUnknown;
  std::optional<EdgeLabeling> labeling;
  bool verified = false;
  /// Exact universal labeling number when it follows (4 or 7 on Class 1).
  std::optional<int> exact_number;
  /// Strict lower bound implied on Class 2 (number > this).
  std::optional<int> exceeds;
};

/// 3-regular graphs: colors 0,1,2 of a 3-edge-coloring become labels 1,2,4.
RegularLabelingResult cubic_labeling(const Graph& g,
                                     std::uint64_t budget = kDefaultColoringBudget);

/// 4-regular graphs: the four color classes become labels 3,5,6,7.
RegularLabelingResult quartic_labeling(const Graph& g,
                                       std::uint64_t budget = kDefaultColoringBudget);

struct AdmissibleOptions {
  std::optional<Label> require_element;
  std::optional<Label> pair_filter_max;
};

/// Sum-free d-subsets of {1..k}, lexicographic. With pair_filter_max = M,
/// also drops sets holding distinct a, b, c with a + b = c + M.
std::vector<std::vector<Label>> admissible_vertex_sets(int d, int k,
                                                       const AdmissibleOptions& options = {});

struct BoundReport {
  Label lower = 0;
  Label upper = 0;
  std::vector<std::string> reasons;
};

BoundReport lower_bound(const Graph& g);

enum class SearchStatus { kExact, kKMaxExceeded, kBudgetExhausted };

struct UniversalNumberResult {
  SearchStatus status = SearchStatus::kBudgetExhausted;
  std::optional<int> exact;
  std::optional<EdgeLabeling> witness;
  /// Best bounds known when the search stops; equal to exact on success.
  int lower = 0;
  std::optional<int> upper;
  std::uint64_t nodes = 0;
};

inline constexpr int kDefaultKMax = 12;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Smallest k admitting a universal labeling from {1..k}, by branch and bound
/// over edges ordered by (endpoint degree sum desc, index).
UniversalNumberResult min_universal_number(const Graph& g, int k_max = kDefaultKMax,
                                           std::uint64_t budget = kDefaultSearchBudget);

/// {"construction", "palette_max", "verified", "exact_number"}.
nlohmann::json construction_sidecar(const std::string& name, const EdgeLabeling& l, bool verified,
                                    std::optional<int> exact_number);

}  // namespace ulab
