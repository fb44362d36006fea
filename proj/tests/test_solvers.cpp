#include <catch_amalgamated.hpp>

#include <optional>
#include <random>

#include "thin/error.hpp"
#include "thin/generators.hpp"
#include "thin/nice_decomposition.hpp"
#include "thin/solvers.hpp"

using namespace thin;

namespace {

constexpr int kInf = 1 << 20;

/// Floyd-Warshall, independent of the library's BFS.
std::vector<std::vector<int>> distances(const Graph &g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
      d[v][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
  return d;
}

bool feasible(const SolveRequest &req, const std::vector<std::vector<int>> &d, const std::vector<Vertex> &x) {
  switch (req.problem) {
  case Problem::DistanceIndependent:
    for (Vertex a : x) {
      if (std::find(req.set.begin(), req.set.end(), a) == req.set.end())
        return false;
      for (Vertex b : x)
        if (a != b && d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] < req.r)
          return false;
    }
    return true;
  case Problem::RDominating:
    for (Vertex t : req.set)
      if (std::none_of(x.begin(), x.end(),
                       [&](Vertex a) { return d[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)] <= req.r; }))
        return false;
    return true;
  case Problem::NeighborhoodHitting:
    for (Vertex t : req.set)
      if (std::none_of(x.begin(), x.end(), [&](Vertex a) { return req.h.has_edge(t, a); }))
        return false;
    return true;
  }
  return false;
}

/// Lexicographically first optimum by enumerating combinations per size.
std::optional<std::vector<Vertex>> oracle(const SolveRequest &req) {
  const int n = static_cast<int>(req.h.num_vertices());
  auto d = distances(req.h);
  const bool maximize = req.problem == Problem::DistanceIndependent;
  for (int step = 0; step <= n; ++step) {
    const int size = maximize ? n - step : step;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
      idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<Vertex> x(idx.begin(), idx.end());
      if (feasible(req, d, x))
        return x;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i)
        --i;
      if (i < 0)
        break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

SolveRequest request(Graph g, Problem p, int r, std::vector<Vertex> set) {
  SolveRequest req;
  req.h = std::move(g);
  req.problem = p;
  req.r = r;
  req.set = std::move(set);
  return req;
}

std::vector<Vertex> all_of(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Vertex>(i);
  return v;
}

} // namespace

TEST_CASE("nice decompositions of small graphs", "[nice]") {
  auto one = nice_decomposition(path_graph(1), single_bag_decomposition(1));
  // leaf, introduce v, forget v.
  REQUIRE(one.nodes.size() == 3);
  CHECK(one.nodes[0].type == NiceType::Leaf);
  CHECK(one.nodes[1].type == NiceType::Introduce);
  CHECK(one.nodes[2].type == NiceType::Forget);

  TreeDecomposition p4{{{0, 1}, {1, 2}, {2, 3}}, {-1, 0, 1}, std::nullopt};
  auto nice = nice_decomposition(path_graph(4), p4);
  CHECK(nice.width() == 1);
  CHECK_THROWS_AS(nice_decomposition(path_graph(4), single_bag_decomposition(3)), Error);
}

TEST_CASE("distance independence", "[solver]") {
  auto p5 = path_graph(5);
  CHECK(solve(request(p5, Problem::DistanceIndependent, 2, {})).value == 0);
  auto a = solve(request(p5, Problem::DistanceIndependent, 2, all_of(5)));
  CHECK(a.value == 3);
  CHECK(a.solution == std::vector<Vertex>{0, 2, 4});
  CHECK(solve(request(p5, Problem::DistanceIndependent, 3, all_of(5))).value == 2);
  CHECK(solve(request(cycle_graph(5), Problem::DistanceIndependent, 2, all_of(5))).value == 2);
}

TEST_CASE("distance domination", "[solver]") {
  auto p5 = path_graph(5);
  CHECK(solve(request(p5, Problem::RDominating, 1, {})).value == 0);
  auto a = solve(request(p5, Problem::RDominating, 1, all_of(5)));
  CHECK(a.value == 2);
  auto b = solve(request(p5, Problem::RDominating, 2, all_of(5)));
  CHECK(b.solution == std::vector<Vertex>{2});
}

TEST_CASE("neighborhood hitting", "[solver]") {
  auto k13 = star_graph_k1(3);
  auto a = solve(request(k13, Problem::NeighborhoodHitting, 1, {1, 2, 3}));
  CHECK(a.solution == std::vector<Vertex>{0});
  auto b = solve(request(path_graph(3), Problem::NeighborhoodHitting, 1, {0, 2}));
  CHECK(b.solution == std::vector<Vertex>{1});
  CHECK(solve(request(k13, Problem::NeighborhoodHitting, 1, {})).value == 0);

  try {
    solve(request(Graph(2), Problem::NeighborhoodHitting, 1, {1}));
    FAIL("expected solver.infeasible");
  } catch (const Error &e) {
    CHECK(e.code() == "solver.infeasible");
  }
}

TEST_CASE("problem names", "[solver]") {
  for (auto p : {Problem::DistanceIndependent, Problem::RDominating, Problem::NeighborhoodHitting})
    CHECK(parse_problem(to_string(p)) == p);
  CHECK_THROWS_AS(parse_problem("mis"), Error);
}

TEST_CASE("power graph", "[solver]") {
  auto p = power_graph(path_graph(5), 2);
  CHECK(p.has_edge(0, 2));
  CHECK_FALSE(p.has_edge(0, 3));
  CHECK(power_graph(path_graph(5), 1) == path_graph(5));
}

TEST_CASE("dynamic programs match the exhaustive oracle", "[solver][oracle]") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 70; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const double p = seed % 2 ? 0.5 : 0.2;
    auto g = gnp(n, p, seed);
    for (auto problem : {Problem::DistanceIndependent, Problem::RDominating, Problem::NeighborhoodHitting}) {
      const int r = 1 + static_cast<int>(seed % 3);
      std::vector<Vertex> set;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 3)
          set.push_back(static_cast<Vertex>(v));
      auto req = request(g, problem, r, set);
      auto want = oracle(req);
      INFO("seed " << seed << " problem " << to_string(problem) << " r " << r);
      if (!want) {
        CHECK_THROWS_AS(solve(req, SolveMethod::Dp), Error);
        continue;
      }
      auto dp = solve(req, SolveMethod::Dp);
      CHECK(dp.value == static_cast<int>(want->size()));
      CHECK(dp.solution == *want);
      auto bf = brute_force(req);
      CHECK(bf.solution == *want);
      CHECK(is_feasible(req, dp.solution));
      ++compared;
    }
  }
  CHECK(compared >= 150);
}

TEST_CASE("larger instances use the dynamic program", "[solver]") {
  auto g = grid_graph(4, 8);
  auto a = solve(request(g, Problem::RDominating, 1, all_of(32)));
  CHECK(a.method.find("dp") != std::string::npos);
  CHECK(is_feasible(request(g, Problem::RDominating, 1, all_of(32)), a.solution));
  // gamma(P4 x Pn) = n for n = 8.
  CHECK(a.value == 8);

  auto t = random_tree(60, 11);
  auto di = solve(request(t, Problem::DistanceIndependent, 3, all_of(60)));
  CHECK(is_feasible(request(t, Problem::DistanceIndependent, 3, all_of(60)), di.solution));
}

TEST_CASE("enlarging the set is monotone", "[solver]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gnp(10, 0.3, seed + 100);
    std::vector<Vertex> half{0, 1, 2, 3, 4};
    auto full = all_of(10);
    CHECK(solve(request(g, Problem::DistanceIndependent, 2, half)).value <=
          solve(request(g, Problem::DistanceIndependent, 2, full)).value);
    CHECK(solve(request(g, Problem::RDominating, 2, half)).value <=
          solve(request(g, Problem::RDominating, 2, full)).value);
  }
}
