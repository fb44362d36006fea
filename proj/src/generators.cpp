#include "thin/generators.hpp"

#include <random>
#include <vector>

#include "thin/error.hpp"

namespace thin {

namespace {

Vertex id(std::size_t v) { return static_cast<Vertex>(v); }

} // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v)
    edges.emplace_back(id(v), id(v + 1));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw Error("cli.bad_size", "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    edges.emplace_back(id(v), id((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      edges.emplace_back(id(u), id(v));
  return Graph(n, edges);
}

Graph star_graph_k1(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= m; ++v)
    edges.emplace_back(0, id(v));
  return Graph(m + 1, edges);
}

Graph grid_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      if (i + 1 < a)
        edges.emplace_back(id(i * b + j), id((i + 1) * b + j));
      if (j + 1 < b)
        edges.emplace_back(id(i * b + j), id(i * b + j + 1));
    }
  return Graph(a * b, edges);
}

Graph apexed_grid(std::size_t n) {
  auto grid = grid_graph(n, n);
  auto edges = grid.edges();
  for (std::size_t v = 0; v < n * n; ++v)
    edges.emplace_back(id(v), id(n * n));
  return Graph(n * n + 1, edges);
}

Graph diag_grid(std::size_t n) {
  auto at = [n](std::size_t x, std::size_t y, std::size_t z) { return id(x + n * y + n * n * z); };
  std::vector<Edge> edges;
  for (std::size_t x = 0; x + 1 < n; ++x)
    for (std::size_t y = 0; y + 1 < n; ++y)
      for (std::size_t z = 0; z + 1 < n; ++z) {
        std::vector<Vertex> cube;
        for (int c = 0; c < 8; ++c)
          cube.push_back(at(x + (c & 1), y + ((c >> 1) & 1), z + ((c >> 2) & 1)));
        for (std::size_t i = 0; i < cube.size(); ++i)
          for (std::size_t j = i + 1; j < cube.size(); ++j)
            edges.emplace_back(cube[i], cube[j]);
      }
  return Graph(n * n * n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v)
    edges.emplace_back(id(rng() % v), id(v));
  return Graph(n, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.emplace_back(id(u), id(v));
  return Graph(n, edges);
}

Graph generate_graph(const GeneratorSpec &spec) {
  const auto &f = spec.family;
  auto need = [&](std::size_t value, const char *what) {
    if (value == 0)
      throw Error("cli.bad_size", f + " needs --" + what + " >= 1");
    return value;
  };
  if (f == "path")
    return path_graph(need(spec.n, "n"));
  if (f == "cycle")
    return cycle_graph(need(spec.n, "n"));
  if (f == "complete")
    return complete_graph(need(spec.n, "n"));
  if (f == "star")
    return star_graph_k1(spec.n);
  if (f == "grid")
    return grid_graph(need(spec.a, "a"), need(spec.b, "b"));
  if (f == "apexed_grid")
    return apexed_grid(need(spec.n, "n"));
  if (f == "diag_grid")
    return diag_grid(need(spec.n, "n"));
  if (f == "random_tree")
    return random_tree(need(spec.n, "n"), spec.seed);
  throw Error("cli.unknown_family", "unknown graph family '" + f + "'");
}

} // namespace thin
