#pragma once

#include <vector>

#include "thin/graph.hpp"

namespace thin {

/// Graphs up to this size get an exhaustive minimum balanced separator.
inline constexpr std::size_t kExactSeparatorLimit = 18;

/// Separation (A, B) given by vertex sets with left ∪ right = V(G); no edge
/// joins left \ right to right \ left.
struct Separation {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<Vertex> separator; ///< left ∩ right
  bool exact = false;            ///< found by exhaustive search (hence minimum)
  bool within_budget = false;    ///< |separator| <= the requested budget

  std::vector<Vertex> left_only() const;
  std::vector<Vertex> right_only() const;
};

/// Balanced: both exclusive sides have at most 2n/3 vertices.
bool is_balanced(const Separation &s, std::size_t n);

/// True iff left ∪ right = V and no edge crosses between the exclusive sides.
bool is_separation(const Graph &g, const Separation &s);

/// Smallest balanced separation found: exhaustive by increasing size for
/// n <= kExactSeparatorLimit, otherwise a BFS-layer heuristic. Falls back to
/// the trivial separation (separator = V) when nothing smaller is balanced.
Separation balanced_separator(const Graph &g, int budget);

} // namespace thin
