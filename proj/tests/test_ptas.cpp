#include <catch_amalgamated.hpp>

#include "thin/builders.hpp"
#include "thin/error.hpp"
#include "thin/generators.hpp"
#include "thin/json_io.hpp"
#include "thin/ptas.hpp"

using namespace thin;

namespace {

std::vector<Vertex> root0{0};

OverlaySystem baker(const Host &host, int r, int k) {
  return layering_lift(host, bfs_layering(host.base, root0), r, k, trivial_builder(r));
}

OverlaySystem star_system(const Host &host, int k) {
  return layering_lift(host, bfs_layering(host.base, root0), 1, k, star_trivial_builder(1));
}

std::string code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return "";
}

} // namespace

TEST_CASE("single vertex", "[ptas]") {
  auto host = Host::plain(path_graph(1));
  auto di = ptas_max_distance_independent(host, baker(host, 2, 1), 2, 1);
  CHECK(di.solution == std::vector<Vertex>{0});
  auto dom = ptas_min_r_dominating(host, baker(host, 1, 3), 1, 3);
  CHECK(dom.value == 1);
  CHECK(dom.feasible);
}

TEST_CASE("distance independence on C_5", "[ptas]") {
  auto host = Host::plain(cycle_graph(5));
  auto rep = ptas_max_distance_independent(host, baker(host, 2, 2), 2, 2);
  CHECK(rep.value == 2);
  CHECK(rep.feasible);
  CHECK(rep.guarantee == Rational(1, 2));
}

TEST_CASE("domination on paths and cycles", "[ptas]") {
  auto p10 = Host::plain(path_graph(10));
  auto a = ptas_min_r_dominating(p10, baker(p10, 1, 2), 1, 2);
  CHECK(a.value == 4);
  CHECK(a.guarantee == Rational(3, 2));
  CHECK(is_r_dominating(p10.base, a.solution, 1));

  auto c12 = Host::plain(cycle_graph(12));
  auto b = ptas_min_r_dominating(c12, baker(c12, 2, 1), 2, 1);
  CHECK(b.value == 3);

  // Deep enough for real windows: OPT(P40, r=1) = 14.
  auto p40 = Host::plain(path_graph(40));
  auto sys = baker(p40, 1, 1);
  REQUIRE(sys.size() > 1);
  auto c = ptas_min_r_dominating(p40, sys, 1, 1);
  CHECK(c.feasible);
  CHECK(c.value >= 14);
  CHECK(c.value <= 28);
  CHECK(c.per_overlay.size() == sys.size());
}

TEST_CASE("clique cover", "[ptas]") {
  auto p3 = Host::with_star(path_graph(3));
  auto a = ptas_s_clique_cover(p3, star_system(p3, 1), 2, 1);
  CHECK(a.solution == std::vector<Vertex>{1});

  auto k3 = Host::with_star(complete_graph(3));
  auto b = ptas_s_clique_cover(k3, star_system(k3, 1), 3, 1);
  CHECK(b.value == 1);

  auto empty = Host::with_star(Graph(4));
  auto c = ptas_s_clique_cover(empty, star_system(empty, 1), 2, 1);
  CHECK(c.solution.empty());

  // Vertex cover of C_20 via real windows: OPT = 10.
  auto c20 = Host::with_star(cycle_graph(20));
  auto d = ptas_s_clique_cover(c20, star_system(c20, 1), 2, 1);
  CHECK(d.feasible);
  CHECK(d.value >= 10);
  CHECK(d.value <= 20);
}

TEST_CASE("engines reject unsuitable systems", "[ptas]") {
  auto p5 = Host::plain(path_graph(5));
  auto other = Host::plain(path_graph(6));
  CHECK(code_of([&] { ptas_min_r_dominating(p5, baker(other, 1, 1), 1, 1); }) == "ptas.host_mismatch");
  CHECK(code_of([&] { ptas_min_r_dominating(p5, baker(p5, 2, 1), 1, 1); }) == "ptas.bad_param");

  auto t = trivial_overlay(p5, 1);
  OverlaySystem thick = trivial_system(p5, 1);
  thick.members = {compose_overlays({t, t})};
  thick.declared_thickness = 2;
  CHECK(code_of([&] { ptas_min_r_dominating(p5, thick, 1, 1); }).empty());
  CHECK(code_of([&] { ptas_min_r_dominating(p5, thick, 1, 2); }) == "ptas.too_thick");

  // Every vertex is thick in one of two members: allowed for k <= 2 only.
  OverlaySystem half = trivial_system(p5, 1);
  half.members = {t, compose_overlays({t, t})};
  half.declared_thickness = Rational(3, 2);
  CHECK(code_of([&] { check_counting_bound(half, 2); }).empty());
  CHECK(code_of([&] { check_counting_bound(half, 3); }) == "ptas.counting_bound");

  CHECK(code_of([&] { ptas_s_clique_cover(p5, baker(p5, 1, 1), 2, 1); }) == "ptas.bad_kind");
}

TEST_CASE("reports are deterministic", "[ptas]") {
  auto host = Host::plain(grid_graph(3, 7));
  auto sys = baker(host, 1, 1);
  auto a = to_json(ptas_min_r_dominating(host, sys, 1, 1)).dump();
  auto b = to_json(ptas_min_r_dominating(host, sys, 1, 1)).dump();
  CHECK(a == b);
  CHECK(a.find("wall_ms") == std::string::npos);
}
