#include <catch_amalgamated.hpp>

#include "thin/builders.hpp"
#include "thin/error.hpp"
#include "thin/generators.hpp"

using namespace thin;

namespace {

std::vector<Vertex> root0{0};

void require_valid(const OverlaySystem &s, const Host &host) {
  auto c = validate_system(s, host);
  INFO("member " << c.member << ": " << c.message << " " << c.overlay.clause << " " << c.overlay.message);
  REQUIRE(c.ok);
}

Graph triangle_with_pendant() {
  // Pendant 3 sees the edge 0-1 of the triangle 0-1-2.
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}};
  return Graph(4, e);
}

} // namespace

TEST_CASE("shallow layerings return the base system", "[layering]") {
  auto host = Host::plain(path_graph(3));
  auto s = layering_lift(host, bfs_layering(host.base, root0), 1, 1, trivial_builder(1));
  CHECK(s.size() == 1);
  CHECK(s.members.front() == trivial_overlay(host, 1));
  require_valid(s, host);
}

TEST_CASE("C_24 layering system", "[layering]") {
  auto host = Host::plain(cycle_graph(24));
  auto l = bfs_layering(host.base, root0);
  REQUIRE(l.depth() == 13);
  auto s = layering_lift(host, l, 1, 1, trivial_builder(1));
  require_valid(s, host);
  CHECK(s.size() == 6);
  CHECK(system_thickness(s).max <= 2);
  CHECK(max_member_width(s) <= 1);
  // Each vertex is seen by one or two windows of a residue.
  for (const auto &m : s.members)
    for (int v = 0; v < 24; ++v) {
      int t = thickness_at(m, v);
      CHECK(t >= 1);
      CHECK(t <= 2);
    }
}

TEST_CASE("window width follows 6kr", "[layering]") {
  auto p12 = Host::plain(path_graph(12));
  auto p13 = Host::plain(path_graph(13));
  auto l12 = bfs_layering(p12.base, root0);
  auto l13 = bfs_layering(p13.base, root0);
  CHECK(layering_lift(p12, l12, 1, 2, trivial_builder(1)).size() == 1);
  CHECK(layering_lift(p12, l12, 1, 1, trivial_builder(1)).size() == 6);
  auto s = layering_lift(p13, l13, 1, 2, trivial_builder(1));
  CHECK(s.size() == 12);
  require_valid(s, p13);
  CHECK(system_thickness(s).max <= one_plus_inverse(2));
}

TEST_CASE("windows and level caps", "[layering]") {
  WindowSpec w{6, 6, 1};
  CHECK(w.first() == 5);
  CHECK(w.last() == 12);
  CHECK(w.cap(5) == 0);
  CHECK(w.cap(6) == 1);
  CHECK(w.cap(11) == 1);
  CHECK(w.cap(12) == 0);
  WindowSpec w2{0, 4, 2};
  CHECK(w2.cap(-1) == 1);
  CHECK(w2.cap(-2) == 0);

  auto host = Host::plain(cycle_graph(24));
  auto l = bfs_layering(host.base, root0);
  auto layer_of = l.index_of(24);
  auto windows = layer_windows(host.base, l, 1, 6);
  REQUIRE_FALSE(windows.empty());
  CHECK_THROWS_AS(layer_windows(host.base, l, 4, 6), Error);
  for (const auto &win : windows) {
    auto wh = Host::plain(win.sub.graph);
    auto o = trivial_overlay(wh, 1);
    std::vector<Vertex> map(win.sub.to_parent);
    auto lifted = remap_host(o, map, host);
    auto capped = cap_levels(lifted, win.spec, layer_of, host);
    for (std::size_t x = 0; x < capped.h.num_vertices(); ++x) {
      int layer = layer_of[static_cast<std::size_t>(capped.f[x])];
      if (layer == win.spec.first() || layer == win.spec.last())
        CHECK(capped.level[x] == 0);
      else
        CHECK(capped.level[x] == 1);
    }
    // Walk preservation survives the cap over the whole host.
    auto c = verify_overlay(capped, host);
    CHECK((c.ok || c.clause == "neighborhood"));
  }
}

TEST_CASE("apex lift", "[apex]") {
  auto host = Host::plain(star_graph_k1(3));
  std::vector<Vertex> none;
  auto plain = as_kind_a(trivial_system(host, 1));
  CHECK(apex_lift(host, none, plain).members == plain.members);

  std::vector<Vertex> center{0};
  auto rest = remove_vertices(host.base, center);
  auto sub = as_kind_a(trivial_system(Host::plain(rest.graph), 1));
  CHECK(max_member_width(sub) == 0);
  auto s = apex_lift(host, center, sub);
  require_valid(s, host);
  for (const auto &m : s.members) {
    CHECK(m.h.num_vertices() == 4);
    CHECK(m.h.num_edges() == 3);
    CHECK(m.td.width() <= 1);
  }

  CHECK_THROWS_AS(apex_lift(host, center, trivial_system(Host::plain(rest.graph), 1)), Error);
}

TEST_CASE("rooted systems are thin on the root set", "[apex]") {
  auto host = Host::plain(star_graph_k1(4));
  std::vector<Vertex> center{0};
  auto s = rooted_system(host, center, 1, trivial_builder(1));
  require_valid(s, host);
  CHECK(system_thickness(s).per_vertex[0] == 1);

  auto path = Host::plain(path_graph(20));
  auto layered = [](const Host &h, int k) {
    return layering_lift(h, bfs_layering(h.base, root0), 1, k, trivial_builder(1));
  };
  auto r = rooted_system(path, center, 1, layered);
  require_valid(r, path);
  for (const auto &m : r.members)
    CHECK(thickness_at(m, 0) == 1);
}

TEST_CASE("subgraph-based systems to star systems", "[star]") {
  auto k1 = Host::with_star(path_graph(1));
  auto s1 = sgbas_to_star(trivial_system(k1, 1), k1);
  require_valid(s1, k1);
  REQUIRE(s1.members.front().h.num_vertices() == 2);
  CHECK(s1.members.front().f == std::vector<Vertex>{0, 1});
  CHECK(s1.members.front().level == std::vector<int>{1, 1});

  auto k2 = Host::with_star(path_graph(2));
  auto s2 = sgbas_to_star(trivial_system(k2, 1), k2);
  require_valid(s2, k2);
  CHECK(s2.members.front().h.num_vertices() == 5);

  // Two components each covering one endpoint: no vertex over v_{uv}.
  auto two = trivial_system(k2, 1);
  auto &m = two.members.front();
  m.h = Graph(2);
  m.td = default_tree_decomposition(m.h);
  auto st = sgbas_to_star(two, k2);
  REQUIRE(st.members.front().h.num_vertices() == 4);
  for (Vertex fv : st.members.front().f)
    CHECK(fv != 4);
}

TEST_CASE("star sum of an edge and a triangle", "[star]") {
  auto host = Host::with_star(complete_graph(3));
  StarSum sum{{0, 1}, {{0, 1, 2}}};
  check_star_sum(host.base, sum);

  auto center_sub = induced_subgraph(host.base, sum.center);
  auto ch = sub_host_like(host, center_sub.graph);
  auto center = star_trivial_builder(1)(ch, 1);
  auto ray = rooted_system(host, {0, 1}, 1, star_trivial_builder(1));
  auto s = star_sum_lift(host, sum, center, {ray});
  require_valid(s, host);
  CHECK(s.kind == OverlayKind::Star);
  CHECK(s.size() == center.size() * ray.size());

  auto alone = star_sum_lift(sub_host_like(host, center_sub.graph), StarSum{{0, 1}, {}}, center, {});
  CHECK(alone.size() == center.size());
  CHECK(total_overlay_vertices(alone) == total_overlay_vertices(center));

  StarSum bad{{0}, {{1, 2}}};
  CHECK_THROWS_AS(check_star_sum(host.base, bad), Error);
}

TEST_CASE("shadow lift", "[shadow]") {
  auto host = Host::with_star(triangle_with_pendant());
  Layering l{{{0, 1, 2}, {3}}};
  auto s = shadow_lift(host, l, 1, 1, star_trivial_builder(1));
  require_valid(s, host);
  CHECK(system_thickness(s).max <= one_plus_inverse(1));
  CHECK(std::find_if(s.notes.begin(), s.notes.end(),
                     [](const std::string &n) { return n == "shadow: depth=2"; }) != s.notes.end());

  Layering single{{{0, 1, 2, 3}}};
  auto one = shadow_lift(host, single, 1, 1, star_trivial_builder(1));
  CHECK(one.members == star_trivial_builder(1)(host, 1).members);

  auto c4 = Host::with_star(cycle_graph(4));
  CHECK_THROWS_AS(shadow_lift(c4, bfs_layering(c4.base, root0), 1, 1, star_trivial_builder(1)), Error);
}

TEST_CASE("builders produce valid systems on a small corpus", "[builders]") {
  std::vector<Graph> corpus{path_graph(15), cycle_graph(17), grid_graph(4, 5), random_tree(25, 3), apexed_grid(3)};
  for (const auto &g : corpus)
    for (int r : {1, 2})
      for (int k : {1, 2}) {
        auto host = Host::plain(g);
        auto s = layering_lift(host, bfs_layering(g, root0), r, k, trivial_builder(r));
        require_valid(s, host);
        CHECK(system_thickness(s).max <= one_plus_inverse(k));
      }
}
