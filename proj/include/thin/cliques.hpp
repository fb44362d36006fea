#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "thin/graph.hpp"

namespace thin {

inline constexpr std::size_t kDefaultCliqueCap = std::size_t{1} << 20;

struct CliqueEnumeration {
  /// Degeneracy ordering: every vertex has at most `degeneracy` neighbours
  /// earlier in the ordering.
  std::vector<Vertex> ordering;
  int degeneracy = 0;
  /// Every non-empty clique exactly once, each sorted, the list ordered by
  /// (size, lexicographic).
  std::vector<std::vector<Vertex>> cliques;
};

/// Throws "graph.clique_blowup" once more than `cap` cliques are found.
CliqueEnumeration degeneracy_and_cliques(const Graph &g, std::size_t cap = kDefaultCliqueCap);

/// G★: the base graph plus a vertex v_K for every non-empty clique K,
/// adjacent exactly to the members of K. Star ids start at base.n and follow
/// the clique order of degeneracy_and_cliques, so v_{{i}} = n + i.
struct StarGraph {
  Graph base;
  Graph star;
  std::vector<std::vector<Vertex>> cliques; ///< cliques[i] is represented by n + i
  std::map<std::vector<Vertex>, Vertex> clique_index;

  std::size_t base_size() const { return base.num_vertices(); }
  bool is_star_vertex(Vertex v) const { return static_cast<std::size_t>(v) >= base.num_vertices(); }
  const std::vector<Vertex> &clique_of(Vertex star_vertex) const {
    return cliques[static_cast<std::size_t>(star_vertex) - base.num_vertices()];
  }
  /// Star vertex of a clique given in any order; nullopt if not a clique.
  std::optional<Vertex> vertex_of(std::vector<Vertex> clique) const;
};

StarGraph star_graph(const Graph &g, std::size_t cap = kDefaultCliqueCap);

} // namespace thin
