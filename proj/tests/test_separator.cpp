#include <catch_amalgamated.hpp>

#include "thin/generators.hpp"
#include "thin/separator.hpp"

using namespace thin;

namespace {

/// Independent check: does some set of `size` vertices leave every
/// component of G - S within 2n/3 after an optimal two-way split?
bool balanced_separator_of_size_exists(const Graph &g, std::size_t size) {
  const std::size_t n = g.num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
      continue;
    std::vector<Vertex> removed;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1)
        removed.push_back(static_cast<Vertex>(v));
    auto rest = remove_vertices(g, removed);
    std::vector<std::size_t> comp;
    for (const auto &c : connected_components(rest.graph))
      comp.push_back(c.size());
    // Subset sums over components.
    std::size_t total = n - size;
    std::vector<char> reach(total + 1, 0);
    reach[0] = 1;
    for (auto c : comp)
      for (std::size_t s = total; s >= c; --s)
        reach[s] |= reach[s - c];
    for (std::size_t s = 0; s <= total; ++s)
      if (reach[s] && 3 * s <= 2 * n && 3 * (total - s) <= 2 * n)
        return true;
  }
  return false;
}

} // namespace

TEST_CASE("single vertex gets the trivial separation", "[separator]") {
  auto s = balanced_separator(path_graph(1), 0);
  CHECK(s.separator == std::vector<Vertex>{0});
  CHECK(is_balanced(s, 1));
}

TEST_CASE("short paths have single-vertex separators", "[separator]") {
  // Sides of size 2n/3 are allowed, so an endpoint already separates P3.
  auto g = path_graph(3);
  auto s = balanced_separator(g, 1);
  CHECK(s.separator == std::vector<Vertex>{0});
  CHECK(is_balanced(s, 3));
  auto p5 = balanced_separator(path_graph(5), 1);
  CHECK(p5.separator == std::vector<Vertex>{1});
  CHECK(p5.left_only().size() == 1);
  CHECK(p5.right_only().size() == 3);
  CHECK(s.exact);
  CHECK(s.within_budget);
  CHECK(is_separation(g, s));
}

TEST_CASE("3x3 grid has a corner separator of size two", "[separator]") {
  auto g = grid_graph(3, 3);
  CHECK_FALSE(balanced_separator_of_size_exists(g, 1));
  CHECK(balanced_separator_of_size_exists(g, 2));
  auto s = balanced_separator(g, 3);
  CHECK(s.separator.size() == 2);
  CHECK(is_balanced(s, 9));
  CHECK(is_separation(g, s));
}

TEST_CASE("exact search matches the independent oracle", "[separator]") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = gnp(11, 0.3, seed);
    auto s = balanced_separator(g, 11);
    REQUIRE(is_separation(g, s));
    REQUIRE(is_balanced(s, 11));
    CHECK(s.exact);
    CHECK(balanced_separator_of_size_exists(g, s.separator.size()));
    if (!s.separator.empty())
      CHECK_FALSE(balanced_separator_of_size_exists(g, s.separator.size() - 1));
  }
}

TEST_CASE("heuristic above the exact limit stays balanced", "[separator]") {
  for (const auto &g : {grid_graph(6, 6), cycle_graph(40), random_tree(50, 4), apexed_grid(5)}) {
    auto s = balanced_separator(g, 6);
    CHECK_FALSE(s.exact);
    CHECK(is_separation(g, s));
    CHECK(is_balanced(s, g.num_vertices()));
  }
  auto s = balanced_separator(cycle_graph(40), 2);
  CHECK(s.separator.size() == 2);
  CHECK(s.within_budget);
}
