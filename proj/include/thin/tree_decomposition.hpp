#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thin/graph.hpp"
#include "thin/layering.hpp"

namespace thin {

/// Rooted tree decomposition. Bags are sorted; parent[root] == -1.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;
  /// Each vertex's bag subtree has depth (in edges) at most this.
  std::optional<int> vertex_depth_bound;

  std::size_t num_bags() const { return bags.size(); }
  /// max bag size - 1; -1 for an empty decomposition.
  int width() const;
  /// max |bag(u) ∩ bag(parent(u))| over tree edges.
  int adhesion() const;
  int root() const;
  std::vector<std::vector<int>> children() const;
  /// Distance of every bag from the root.
  std::vector<int> depths() const;

  bool operator==(const TreeDecomposition &) const = default;
};

struct TdCheck {
  bool ok = true;
  std::string reason;
};

/// Tree shape (one root, acyclic parents), edge coverage, connected
/// non-empty subtree per vertex, and the depth bound if declared.
TdCheck check_decomposition(const Graph &g, const TreeDecomposition &td);

/// Throws "td.invalid" with the reason when check_decomposition fails.
void validate_decomposition(const Graph &g, const TreeDecomposition &td);

/// Same bags, rooted at `new_root`. The depth bound is recomputed.
TreeDecomposition reroot(const TreeDecomposition &td, int new_root);

/// Largest depth (in edges) of any vertex's bag subtree.
int max_vertex_subtree_depth(const TreeDecomposition &td, std::size_t n);

/// Recursive balanced-separator decomposition: bag = boundary ∪ separator,
/// one child per non-empty exclusive side, whose boundary is the part of
/// the bag adjacent to it. `s` < 0 disables the budget check; otherwise a
/// separator larger than `s` throws "td.separator_budget".
TreeDecomposition separator_tree_decomposition(const Graph &g, int s);

/// Min-degree elimination ordering decomposition (ties by smallest id).
TreeDecomposition elimination_tree_decomposition(const Graph &g);

/// The narrower of the two decompositions above (separator one on ties).
TreeDecomposition default_tree_decomposition(const Graph &g);

/// Single bag holding every vertex.
TreeDecomposition single_bag_decomposition(std::size_t n);

/// Layer i collects the vertices first met in bags at root distance in
/// [i*a, (i+1)*a), with a = vertex_depth_bound (computed if absent, at least
/// 1). Empty layers are dropped. Throws "td.depth_bound" if a declared bound
/// is exceeded.
Layering depth_band_layering(const Graph &g, const TreeDecomposition &td);

} // namespace thin
