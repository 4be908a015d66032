#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ulab/graph.hpp"

namespace ulab {

/// Proper edge coloring with colors 1..palette_size.
struct EdgeColoring {
  std::vector<int> color;
  int palette_size = 0;

  /// Labeling that carries the colors unchanged.
  EdgeLabeling as_labeling() const;
};

/// Delta-coloring of a tree: BFS from root, children of each vertex take the
/// smallest colors not used by the parent edge or earlier siblings.
EdgeColoring tree_edge_coloring(const Graph& t, Vertex root = 0);

/// Misra-Gries fan/path recoloring, palette at most max_degree + 1.
EdgeColoring color_delta_plus_one(const Graph& g);

enum class EdgeClass { kClass1, kClass2, kUnknown };

struct ChromaticIndexResult {
  EdgeClass verdict = EdgeClass::kUnknown;
  std::optional<EdgeColoring> coloring;  // present for kClass1
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

/// Decides whether g has a proper max_degree-coloring by backtracking over
/// edges (degree-descending) with forward checking. A Class1 verdict carries
/// the first coloring in ascending-color order.
ChromaticIndexResult exact_chromatic_index(const Graph& g,
                                           std::uint64_t budget = kDefaultColoringBudget);

}  // namespace ulab
