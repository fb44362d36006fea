#include <catch_amalgamated.hpp>

#include <cmath>

#include "thin/error.hpp"
#include "thin/generators.hpp"
#include "thin/schedule.hpp"

using namespace thin;

namespace {

ScheduleParams unit_params() {
  ScheduleParams p;
  p.alpha = 1;
  p.r = 1;
  p.k = 1;
  p.t = 64;
  return p;
}

} // namespace

TEST_CASE("schedule arithmetic", "[schedule]") {
  auto p = unit_params();
  CHECK(schedule_s(p, 1) == 1);
  CHECK(schedule_s(p, 2) == 16);
  CHECK(schedule_s(p, 3) == 32);
  auto lv = schedule_levels(p, 4);
  REQUIRE(lv.size() == 4);
  CHECK(lv[0].theta == 1);
  CHECK(lv[1].theta == Rational(5, 4));
  CHECK(lv[2].theta == Rational(11, 8));
  CHECK(lv[3].theta == Rational(23, 16));
  for (const auto &l : lv)
    CHECK(l.theta <= one_plus_inverse(p.k));

  // Closed form: theta_i = 1 + 4r * sum_{j=2..i} 1/s_j.
  ScheduleParams q;
  q.alpha = Rational(1, 2);
  q.r = 2;
  q.k = 3;
  auto lq = schedule_levels(q, 5);
  Rational sum = 0;
  for (int i = 2; i <= 5; ++i) {
    sum += Rational(1, static_cast<long long>(schedule_s(q, i)));
    CHECK(lq[static_cast<std::size_t>(i - 1)].theta == 1 + 4 * q.r * sum);
  }

  // s_2 = ceil(4 * (3/2)^2 * 6 / (1/2)) = 108.
  CHECK(schedule_s(q, 2) == 108);
}

TEST_CASE("schedule parameter checks", "[schedule]") {
  auto p = unit_params();
  p.alpha = 0;
  CHECK_THROWS_AS(schedule_levels(p, 2), Error);
  p = unit_params();
  p.delta = 1;
  CHECK_THROWS_AS(schedule_levels(p, 2), Error);
  p = unit_params();
  p.t = BigInt(1) << 32;
  CHECK_THROWS_AS(schedule_levels(p, 2), Error);

  // Tiny alpha makes s_2 exceed the layer budget.
  p = unit_params();
  p.alpha = Rational(1, 1000000000);
  try {
    schedule_levels(p, 2);
    FAIL("expected schedule.infeasible");
  } catch (const Error &e) {
    CHECK(e.code() == "schedule.infeasible");
  }

  p = unit_params();
  p.strict = true;
  p.t = 3;
  CHECK_THROWS_AS(schedule_levels(p, 2), Error);
}

TEST_CASE("separator system sizes", "[schedule]") {
  auto p = unit_params();
  auto small = Host::plain(path_graph(10));
  auto s1 = separator_system(small, p, 1);
  CHECK(s1.size() == 1);
  CHECK(system_thickness(s1).max == 1);
  CHECK(validate_system(s1, small).ok);

  auto big = Host::plain(path_graph(100));
  try {
    separator_system(big, p, 1);
    FAIL("expected schedule.component_too_large");
  } catch (const Error &e) {
    CHECK(e.code() == "schedule.component_too_large");
  }

  // Level-2 windows span every depth band of these graphs, so n_1 must cover n.
  p.t = 128;
  for (const auto &g : {path_graph(100), grid_graph(8, 8), random_tree(90, 1)}) {
    auto host = Host::plain(g);
    auto s = separator_system(host, p, 2);
    CHECK(s.size() == 16);
    auto c = validate_system(s, host);
    INFO(c.message << " " << c.overlay.clause);
    CHECK(c.ok);
    CHECK(system_thickness(s).max <= Rational(5, 4));
    CHECK(max_member_width(s) <= 128);
  }
}

TEST_CASE("sublinear separator parameters", "[schedule]") {
  auto a = sublin_params(2, Rational(1, 2), 1, 1, 1000);
  CHECK(a.epsilon == Rational(1, 2));
  CHECK(a.alpha == Rational(1, 8));
  CHECK(a.c_prime == 4);
  CHECK(a.log2_a == Catch::Approx(64.0));
  // 4 * (2 + (81/64) * 64) = 332 bits: t does not fit.
  CHECK(a.log2_t == Catch::Approx(332.0));
  CHECK_FALSE(a.t);
  CHECK(a.level == 18);
  CHECK_THROWS_AS(separator_system(Host::plain(path_graph(5)), a.params, 1), Error);

  auto b = sublin_params(2, Rational(3, 4), 1, 1, 10);
  CHECK(b.epsilon == Rational(1, 3));
  CHECK(b.alpha == Rational(1, 9));

  auto z = sublin_params(3, Rational(0), 2, 1, 2);
  CHECK(z.epsilon == Rational(1, 2));
  CHECK(z.c_prime == 81);
  CHECK(z.level == 1);
  CHECK(z.monotone);

  CHECK_THROWS_AS(sublin_params(1, Rational(1, 2), 1, 1, 10), Error);
  CHECK_THROWS_AS(sublin_params(2, Rational(1), 1, 1, 10), Error);
}
