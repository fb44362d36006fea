#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thin/graph.hpp"

namespace thin {

/// Ordered partition V_1..V_d of the vertex set (stored 0-based: layers[0] is V_1).
/// Edges may only join vertices in the same or in consecutive layers.
struct Layering {
  std::vector<std::vector<Vertex>> layers;

  std::size_t depth() const { return layers.size(); }

  /// Layer index (0-based) per vertex; throws "layering.not_partition" unless
  /// the layers partition 0..n-1.
  std::vector<int> index_of(std::size_t n) const;

  bool operator==(const Layering &) const = default;
};

/// Layer i holds vertices at distance i from `roots`. Components missed by the
/// roots are layered from their smallest vertex and appended after the rest.
Layering bfs_layering(const Graph &g, std::span<const Vertex> roots);

struct LayeringCheck {
  bool ok = true;
  std::optional<Edge> violating_edge;
};

/// First edge whose endpoints are two or more layers apart, if any.
LayeringCheck verify_layering(const Graph &g, const Layering &l);

/// Layers restricted to `sub` (renumbered to local ids); empty layers dropped
/// only at the ends when `trim` is set.
Layering restrict_layering(const Layering &l, const Subgraph &sub, bool trim = true);

struct ShadowCheck {
  bool ok = true;
  int layer = -1;                  ///< 0-based index i of the layer V_{i+1} seeing the component
  std::vector<Vertex> component;   ///< offending component of the suffix graph
  std::vector<Vertex> attachment;  ///< its neighbours in that layer (not a clique)
};

/// For every i and every component C of G[V_{i+1} ∪ ... ∪ V_d], the
/// neighbours of C in V_i must induce a clique.
ShadowCheck check_shadow_complete(const Graph &g, const Layering &l);

/// Merges consecutive layers until the layering is shadow-complete. Always
/// terminates: a single layer is trivially shadow-complete.
Layering coarsen_to_shadow_complete(const Graph &g, Layering l);

} // namespace thin
