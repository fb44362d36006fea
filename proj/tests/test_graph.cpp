#include <catch_amalgamated.hpp>

#include <sstream>

#include "thin/cliques.hpp"
#include "thin/error.hpp"
#include "thin/generators.hpp"
#include "thin/graph.hpp"
#include "thin/io.hpp"
#include "thin/layering.hpp"
#include "thin/nice_decomposition.hpp"
#include "thin/tree_decomposition.hpp"

using namespace thin;

namespace {

std::vector<Edge> edges_of(std::initializer_list<Edge> e) { return e; }

bool symmetric_and_simple(const Graph &g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == static_cast<Vertex>(v) || (i > 0 && nb[i - 1] >= nb[i]))
        return false;
      if (!g.has_edge(nb[i], static_cast<Vertex>(v)))
        return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("graph constructor normalises edges", "[graph]") {
  auto e = edges_of({{1, 0}, {0, 1}, {2, 1}});
  Graph g(3, e);
  CHECK(g.num_edges() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(symmetric_and_simple(g));

  auto loop = edges_of({{1, 1}});
  CHECK_THROWS_AS(Graph(2, loop), Error);
  auto out = edges_of({{0, 5}});
  CHECK_THROWS_AS(Graph(2, out), Error);
}

TEST_CASE("generators produce simple graphs of the right size", "[graph]") {
  CHECK(path_graph(1).num_vertices() == 1);
  CHECK(path_graph(1).num_edges() == 0);
  CHECK(cycle_graph(6).num_edges() == 6);
  CHECK(grid_graph(3, 3).num_edges() == 12);
  CHECK(star_graph_k1(3).degree(0) == 3);

  auto ag = apexed_grid(2);
  CHECK(ag.num_vertices() == 5);
  CHECK(ag.num_edges() == 8);
  CHECK(ag.degree(4) == 4);

  // Every pair of the 2x2x2 cube shares the unit subcube.
  CHECK(diag_grid(2) == complete_graph(8));
  auto d3 = diag_grid(3);
  CHECK(d3.degree(13) == 26);
  CHECK(d3.degree(0) == 7);

  auto t = random_tree(40, 7);
  CHECK(t.num_edges() == 39);
  CHECK(connected_components(t).size() == 1);
  CHECK(random_tree(40, 7) == t);

  for (const auto &g : {ag, d3, t, gnp(30, 0.2, 3), grid_graph(4, 5)})
    CHECK(symmetric_and_simple(g));
}

TEST_CASE("bfs layering", "[layering]") {
  auto p1 = path_graph(1);
  std::vector<Vertex> r0{0};
  CHECK(bfs_layering(p1, r0).layers == std::vector<std::vector<Vertex>>{{0}});

  CHECK(bfs_layering(path_graph(3), r0).layers == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});

  auto c6 = bfs_layering(cycle_graph(6), r0);
  CHECK(c6.layers == std::vector<std::vector<Vertex>>{{0}, {1, 5}, {2, 4}, {3}});

  // The second component is layered from its smallest vertex and appended.
  auto e = edges_of({{0, 1}, {2, 3}, {3, 4}});
  Graph two(5, e);
  auto l = bfs_layering(two, r0);
  CHECK(l.layers == std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}, {4}});
  CHECK(verify_layering(two, l).ok);

  CHECK_THROWS_AS(bfs_layering(two, std::vector<Vertex>{}), Error);
}

TEST_CASE("verify layering", "[layering]") {
  auto p3 = path_graph(3);
  Layering ok{{{0, 2}, {1}}};
  CHECK(verify_layering(p3, ok).ok);

  Layering bad{{{0}, {2}, {1}}};
  auto c = verify_layering(p3, bad);
  CHECK_FALSE(c.ok);
  REQUIRE(c.violating_edge);
  CHECK(*c.violating_edge == Edge{0, 1});

  Layering partial{{{0}, {1}}};
  CHECK_THROWS_AS(verify_layering(p3, partial), Error);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gnp(25, 0.1, seed);
    std::vector<Vertex> roots{static_cast<Vertex>(seed % 25)};
    CHECK(verify_layering(g, bfs_layering(g, roots)).ok);
  }
}

TEST_CASE("shadow completeness", "[layering]") {
  // Triangle with a pendant: layering from the pendant end is shadow-complete.
  auto e = edges_of({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  Graph g(4, e);
  Layering good{{{3}, {2}, {0, 1}}};
  CHECK(check_shadow_complete(g, good).ok);

  // C_4 from one vertex: the far vertex sees two non-adjacent vertices.
  auto c4 = cycle_graph(4);
  std::vector<Vertex> r0{0};
  auto l = bfs_layering(c4, r0);
  auto c = check_shadow_complete(c4, l);
  CHECK_FALSE(c.ok);
  CHECK(c.layer == 1);
  CHECK(c.attachment == std::vector<Vertex>{1, 3});

  auto coarse = coarsen_to_shadow_complete(c4, l);
  CHECK(check_shadow_complete(c4, coarse).ok);
  CHECK(verify_layering(c4, coarse).ok);
}

TEST_CASE("degeneracy and cliques", "[cliques]") {
  auto e3 = Graph(3);
  auto a = degeneracy_and_cliques(e3);
  CHECK(a.degeneracy == 0);
  CHECK(a.cliques.size() == 3);

  auto b = degeneracy_and_cliques(path_graph(3));
  CHECK(b.degeneracy == 1);
  CHECK(b.cliques.size() == 5);

  auto k3 = degeneracy_and_cliques(complete_graph(3));
  CHECK(k3.degeneracy == 2);
  CHECK(k3.cliques.size() == 7);
  CHECK(k3.cliques.back() == std::vector<Vertex>{0, 1, 2});

  CHECK_THROWS_AS(degeneracy_and_cliques(complete_graph(12), 100), Error);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = gnp(14, 0.3, seed);
    auto en = degeneracy_and_cliques(g);
    CHECK(en.cliques.size() <= (std::size_t{1} << en.degeneracy) * g.num_vertices());
    for (const auto &q : en.cliques)
      CHECK(is_clique(g, q));
  }
}

TEST_CASE("star graph", "[cliques]") {
  auto k1 = star_graph(path_graph(1));
  CHECK(k1.star.num_vertices() == 2);
  CHECK(k1.star.num_edges() == 1);

  auto uv = star_graph(path_graph(2));
  CHECK(uv.star.num_vertices() == 5);
  CHECK(uv.star.num_edges() == 5);
  CHECK(uv.vertex_of({1, 0}) == std::optional<Vertex>(4));

  auto k3 = star_graph(complete_graph(3));
  CHECK(k3.star.num_vertices() == 10);
  CHECK(k3.star.num_edges() == 15);
  for (std::size_t q = 0; q < k3.cliques.size(); ++q) {
    Vertex sv = static_cast<Vertex>(3 + q);
    auto nb = k3.star.neighbors(sv);
    CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == k3.cliques[q]);
  }
  CHECK_FALSE(star_graph(path_graph(3)).vertex_of({0, 2}));
}

TEST_CASE("tree decomposition checks", "[td]") {
  auto p4 = path_graph(4);
  TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {-1, 0, 1}, std::nullopt};
  CHECK(check_decomposition(p4, td).ok);
  CHECK(td.width() == 1);
  CHECK(td.adhesion() == 1);

  TreeDecomposition missing{{{0, 1}, {2, 3}}, {-1, 0}, std::nullopt};
  CHECK_FALSE(check_decomposition(p4, missing).ok);

  TreeDecomposition split{{{0, 1}, {1, 2}, {2, 3}, {1}}, {-1, 0, 1, 1}, std::nullopt};
  CHECK(check_decomposition(p4, split).ok);
  TreeDecomposition disconnected{{{0, 1}, {2}, {2, 3}, {1, 2}}, {-1, 0, 1, 2}, std::nullopt};
  CHECK_FALSE(check_decomposition(p4, disconnected).ok);

  auto rr = reroot(td, 2);
  CHECK(rr.root() == 2);
  CHECK(check_decomposition(p4, rr).ok);
}

TEST_CASE("separator tree decomposition", "[td]") {
  auto one = separator_tree_decomposition(path_graph(1), 1);
  CHECK(one.num_bags() == 1);
  CHECK(one.width() == 0);

  auto p4 = separator_tree_decomposition(path_graph(4), 1);
  CHECK(check_decomposition(path_graph(4), p4).ok);
  CHECK(p4.width() <= 4);

  auto c6 = separator_tree_decomposition(cycle_graph(6), 2);
  CHECK(check_decomposition(cycle_graph(6), c6).ok);
  CHECK(c6.width() <= 10);

  CHECK_THROWS_AS(separator_tree_decomposition(grid_graph(3, 3), 1), Error);

  auto g = grid_graph(5, 5);
  auto td = default_tree_decomposition(g);
  CHECK(check_decomposition(g, td).ok);
  CHECK(default_tree_decomposition(path_graph(9)).width() == 1);
}

TEST_CASE("depth band layering", "[td]") {
  auto p4 = path_graph(4);
  TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {-1, 0, 1}, 2};
  auto l = depth_band_layering(p4, td);
  CHECK(l.layers == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}});

  auto single = depth_band_layering(p4, single_bag_decomposition(4));
  CHECK(single.layers == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}});

  for (const auto &g : {grid_graph(4, 4), cycle_graph(11), random_tree(30, 2), apexed_grid(3)}) {
    auto t = separator_tree_decomposition(g, -1);
    CHECK(verify_layering(g, depth_band_layering(g, t)).ok);
  }
}

TEST_CASE("nice decomposition", "[td]") {
  auto g = grid_graph(3, 4);
  auto td = default_tree_decomposition(g);
  auto nice = nice_decomposition(g, td);
  CHECK(nice.width() == td.width());
  CHECK(check_decomposition(g, nice.as_tree_decomposition()).ok);
  CHECK(nice.nodes[static_cast<std::size_t>(nice.root)].bag.empty());
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const auto &nd = nice.nodes[i];
    for (int c : nd.children)
      CHECK(static_cast<std::size_t>(c) < i);
    switch (nd.type) {
    case NiceType::Leaf:
      CHECK(nd.bag.empty());
      CHECK(nd.children.empty());
      break;
    case NiceType::Join:
      REQUIRE(nd.children.size() == 2);
      CHECK(nice.nodes[static_cast<std::size_t>(nd.children[0])].bag == nd.bag);
      CHECK(nice.nodes[static_cast<std::size_t>(nd.children[1])].bag == nd.bag);
      break;
    default:
      CHECK(nd.children.size() == 1);
    }
  }
}

TEST_CASE("text formats round trip", "[io]") {
  auto g = apexed_grid(3);
  std::stringstream gr;
  write_gr(gr, g);
  CHECK(read_gr(gr) == g);

  std::stringstream commented("c hello\np tw 3 2\n1 2\nc mid\n2 3\n");
  CHECK(read_gr(commented) == path_graph(3));

  std::stringstream broken("p tw 3 2\n1 2\n");
  CHECK_THROWS_AS(read_gr(broken), Error);

  auto td = default_tree_decomposition(g);
  std::stringstream tds;
  write_td(tds, td, g.num_vertices());
  auto back = read_td(tds);
  CHECK(check_decomposition(g, back).ok);
  CHECK(back.bags == td.bags);
  CHECK(back.width() == td.width());

  std::vector<Vertex> r0{0};
  auto l = bfs_layering(g, r0);
  std::stringstream ls;
  write_layering(ls, l);
  CHECK(read_layering(ls) == l);
}
