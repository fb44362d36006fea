#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thin/rational.hpp"
#include "thin/system.hpp"

namespace thin {

/// Parameters of the separator recursion. `t` is the base-case component
/// size and the declared width; it must not exceed 2^31.
struct ScheduleParams {
  Rational alpha{1};
  /// Separator exponent in [0, 1); only feeds the n_i diagnostics.
  Rational delta{1, 2};
  int c = 2;
  int r = 1;
  int k = 1;
  BigInt t{3};
  /// Enforce component size <= n_i and increasing n_i.
  bool strict = false;
};

struct ScheduleLevel {
  int i = 1;
  BigInt s{1};
  Rational theta{1};
  /// log2 n_i; +inf when delta is 0.
  double log2_n = 0;
};

/// s_i = ceil(4 (1+alpha)^i r k / alpha) for i >= 2, s_1 = 1.
BigInt schedule_s(const ScheduleParams &p, int i);

/// Levels 1..levels. Throws "schedule.bad_params" for alpha <= 0, delta
/// outside [0, 1), c < 2, r or k < 1, or t outside [1, 2^31].
std::vector<ScheduleLevel> schedule_levels(const ScheduleParams &p, int levels);

/// System of kind S at level i: size exactly s_1 * ... * s_i, thickness at
/// most theta_i, width at most t. Connected inputs at level >= 2 are
/// layered by depth bands of the separator decomposition. Throws
/// "schedule.component_too_large" ("component exceeds n_i") or
/// "schedule.infeasible".
OverlaySystem separator_system(const Host &host, const ScheduleParams &p, int level);

/// Derived constants of the sublinear-separator parameter choice.
struct SublinParams {
  Rational epsilon;
  Rational alpha;
  BigInt c_prime;
  /// log2 of a = c^(8rk/alpha).
  double log2_a = 0;
  double log2_t = 0;
  /// t when it fits in 2^31.
  std::optional<BigInt> t;
  /// ceil(ln ln n / ln(1+alpha)) + 1, or 1 when ln n <= 1.
  int level = 1;
  /// log2 n_level >= log2 n.
  bool covers_n = false;
  /// log2 n_i >= (1+alpha)^(i-1) log2 t for i = 1..level.
  bool monotone = false;
  std::string t_expression;
  ScheduleParams params;
};

/// Throws "schedule.bad_params" for delta outside [0, 1) or c < 2.
SublinParams sublin_params(int c, const Rational &delta, int r, int k, std::size_t n);

} // namespace thin
