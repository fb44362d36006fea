#pragma once

#include <vector>

#include "thin/graph.hpp"
#include "thin/tree_decomposition.hpp"

namespace thin {

enum class NiceType { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceType type = NiceType::Leaf;
  /// Introduced or forgotten vertex; -1 for leaves and joins.
  Vertex vertex = -1;
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// Leaves have empty bags, joins have two children with equal bags, and the
/// root bag is empty. Children precede parents in `nodes`.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  /// Same bags and shape as a plain tree decomposition.
  TreeDecomposition as_tree_decomposition() const;
};

/// Throws "td.invalid" when td is not a decomposition of g.
NiceDecomposition nice_decomposition(const Graph &g, const TreeDecomposition &td);

} // namespace thin
