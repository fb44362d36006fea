#pragma once

#include <cstdint>
#include <string>

#include "thin/graph.hpp"

namespace thin {

Graph path_graph(std::size_t n);
/// n >= 3.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Center 0, leaves 1..m.
Graph star_graph_k1(std::size_t m);
/// a rows by b columns; vertex (i, j) has id i*b + j.
Graph grid_graph(std::size_t a, std::size_t b);
/// n x n grid plus a universal vertex with id n*n.
Graph apexed_grid(std::size_t n);
/// n x n x n grid points, (x, y, z) -> x + n*y + n*n*z; two points are
/// adjacent iff they lie in a common unit subcube.
Graph diag_grid(std::size_t n);
/// Vertex v >= 1 hangs below a uniformly chosen earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Erdős–Rényi G(n, p).
Graph gnp(std::size_t n, double p, std::uint64_t seed);

struct GeneratorSpec {
  std::string family;
  std::size_t n = 0, a = 0, b = 0;
  std::uint64_t seed = 0;
};

/// path/cycle/grid/apexed_grid/diag_grid/random_tree/complete/star.
/// Throws "cli.unknown_family" or "cli.bad_size".
Graph generate_graph(const GeneratorSpec &spec);

} // namespace thin
