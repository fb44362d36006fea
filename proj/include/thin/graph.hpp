#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace thin {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted,
/// symmetric, loop-free and duplicate-free; the constructor enforces this.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  /// Duplicate edges are merged. Self-loops and out-of-range ids throw.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// FNV-1a over n and the sorted edge list.
  std::uint64_t content_hash() const;

  bool operator==(const Graph &) const = default;

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// A graph together with the ids its vertices carry in a parent graph.
/// Local ids follow the order of `to_parent`, which is ascending for
/// induced subgraphs.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  /// parent id -> local id, -1 where absent.
  std::vector<Vertex> from_parent(std::size_t parent_n) const;
};

/// Induced subgraph on `vertices` (deduplicated and sorted first).
Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Induced subgraph on V(g) minus `removed`.
Subgraph remove_vertices(const Graph &g, std::span<const Vertex> removed);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

/// Multi-source BFS distances; -1 for unreached vertices. A non-negative
/// `limit` stops the search at that depth.
std::vector<int> bfs_distances(const Graph &g, std::span<const Vertex> sources, int limit = -1);

/// Distances between all pairs, -1 when disconnected. Intended for small graphs.
std::vector<std::vector<int>> all_pairs_distances(const Graph &g);

/// True iff `vertices` are pairwise adjacent.
bool is_clique(const Graph &g, std::span<const Vertex> vertices);

} // namespace thin
