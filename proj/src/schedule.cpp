#include "thin/schedule.hpp"

#include <cmath>
#include <limits>

#include "thin/builders.hpp"
#include "thin/error.hpp"
#include "thin/tree_decomposition.hpp"

namespace thin {

namespace {

const BigInt kTwoPow31 = BigInt(1) << 31;

BigInt ceil_div(const BigInt &a, const BigInt &b) { return (a + b - 1) / b; }

double log2_big(const BigInt &v) {
  // Exact enough for diagnostics: shift to 53 significant bits first.
  const auto bits = static_cast<long long>(msb(v)) + 1;
  if (bits <= 60)
    return std::log2(static_cast<double>(static_cast<unsigned long long>(v)));
  const long long shift = bits - 60;
  return std::log2(static_cast<double>(static_cast<unsigned long long>(v >> shift))) + static_cast<double>(shift);
}

double to_double(const Rational &q) { return q.convert_to<double>(); }

void check_params(const ScheduleParams &p) {
  auto bad = [](const std::string &m) { throw Error("schedule.bad_params", m); };
  if (p.alpha <= 0)
    bad("alpha must be positive");
  if (p.delta < 0 || p.delta >= 1)
    bad("delta must lie in [0, 1)");
  if (p.c < 2)
    bad("c must be at least 2");
  if (p.r < 1 || p.k < 1)
    bad("r and k must be positive");
  if (p.t < 1 || p.t > kTwoPow31)
    bad("t must lie in [1, 2^31], got " + p.t.str());
}

OverlaySystem level_system(const Host &host, const ScheduleParams &p, const std::vector<ScheduleLevel> &levels,
                           int i);

OverlaySystem connected_level(const Host &host, const ScheduleParams &p, const std::vector<ScheduleLevel> &levels,
                              int i) {
  const Graph &g = host.base;
  const auto n = g.num_vertices();
  const auto &lv = levels[static_cast<std::size_t>(i - 1)];
  if (p.strict && std::log2(static_cast<double>(n)) > lv.log2_n)
    throw Error("schedule.component_too_large", "component exceeds n_" + std::to_string(i) + " (" +
                                                    std::to_string(n) + " vertices)");
  if (i == 1) {
    if (BigInt(n) > p.t)
      throw Error("schedule.component_too_large",
                  "component exceeds n_1 = " + p.t.str() + " (" + std::to_string(n) + " vertices)");
    auto s = trivial_system(host, p.r);
    s.declared_tw = static_cast<int>(p.t);
    return s;
  }
  const int delta = static_cast<int>(lv.s);
  auto layering = depth_band_layering(g, separator_tree_decomposition(g, -1));
  auto windows = layer_windows(g, layering, p.r, delta);
  std::vector<OverlaySystem> systems;
  for (const auto &w : windows)
    systems.push_back(level_system(Host::plain(w.sub.graph), p, levels, i - 1));
  auto out = assemble_windows(host, layering, windows, systems);
  out.declared_thickness = lv.theta;
  out.declared_tw = static_cast<int>(p.t);
  return out;
}

OverlaySystem level_system(const Host &host, const ScheduleParams &p, const std::vector<ScheduleLevel> &levels,
                           int i) {
  auto comps = connected_components(host.base);
  if (comps.size() == 1)
    return connected_level(host, p, levels, i);
  if (comps.empty())
    throw Error("schedule.empty", "graph has no vertices");
  std::vector<OverlaySystem> lifted;
  for (const auto &comp : comps) {
    auto sub = induced_subgraph(host.base, comp);
    Host sh = Host::plain(sub.graph);
    auto s = connected_level(sh, p, levels, i);
    lifted.push_back(remap_system(s, embedding_map(sh, sub, host, OverlayKind::S), host));
  }
  // Every component system has size s_1 * ... * s_i, so no replication.
  auto out = compose_systems(lifted);
  out.declared_thickness = levels[static_cast<std::size_t>(i - 1)].theta;
  out.declared_tw = static_cast<int>(p.t);
  return out;
}

} // namespace

BigInt schedule_s(const ScheduleParams &p, int i) {
  if (i <= 1)
    return 1;
  Rational v = Rational(4 * p.r) * p.k / p.alpha;
  const Rational step = 1 + p.alpha;
  for (int j = 0; j < i; ++j)
    v *= step;
  return ceil_div(numerator(v), denominator(v));
}

std::vector<ScheduleLevel> schedule_levels(const ScheduleParams &p, int levels) {
  check_params(p);
  if (levels < 1)
    throw Error("schedule.bad_params", "at least one level is needed");
  std::vector<ScheduleLevel> out;
  const double log2_c = std::log2(static_cast<double>(p.c));
  for (int i = 1; i <= levels; ++i) {
    ScheduleLevel lv;
    lv.i = i;
    lv.s = schedule_s(p, i);
    if (i == 1) {
      lv.theta = 1;
      lv.log2_n = log2_big(p.t);
    } else {
      if (lv.s > BigInt(std::numeric_limits<int>::max() / 4))
        throw Error("schedule.infeasible", "s_" + std::to_string(i) + " = " + lv.s.str() + " is too large");
      const auto &prev = out.back();
      lv.theta = prev.theta + Rational(4 * p.r, static_cast<long long>(lv.s));
      if (p.delta == 0)
        lv.log2_n = std::numeric_limits<double>::infinity();
      else
        lv.log2_n = (prev.log2_n - (static_cast<double>(lv.s) + 2 * p.r) * log2_c) / to_double(p.delta);
      if (p.strict && !(lv.log2_n > prev.log2_n))
        throw Error("schedule.infeasible", "n_" + std::to_string(i) + " does not exceed n_" + std::to_string(i - 1));
    }
    if (lv.theta > one_plus_inverse(p.k))
      throw Error("schedule.infeasible", "theta_" + std::to_string(i) + " = " + to_string(lv.theta) + " exceeds 1+1/k");
    out.push_back(lv);
  }
  return out;
}

OverlaySystem separator_system(const Host &host, const ScheduleParams &p, int level) {
  auto levels = schedule_levels(p, level);
  auto out = level_system(Host::plain(host.base), p, levels, level);
  BigInt size = 1;
  for (const auto &lv : levels)
    size *= lv.s;
  if (BigInt(out.size()) != size)
    throw Error("schedule.infeasible", "system size " + std::to_string(out.size()) + " differs from " + size.str());
  out.notes.push_back("separator: level=" + std::to_string(level) + " size=" + size.str());
  return out;
}

SublinParams sublin_params(int c, const Rational &delta, int r, int k, std::size_t n) {
  if (delta < 0 || delta >= 1)
    throw Error("schedule.bad_params", "delta must lie in [0, 1)");
  if (c < 2)
    throw Error("schedule.bad_params", "c must be at least 2");
  if (r < 1 || k < 1)
    throw Error("schedule.bad_params", "r and k must be positive");
  SublinParams out;
  out.epsilon = Rational(1, 2);
  if (delta > 0)
    out.epsilon = std::min(Rational(1) / delta - 1, Rational(1, 2));
  out.alpha = out.epsilon * (1 - out.epsilon) / 2;
  out.c_prime = pow(BigInt(c), static_cast<unsigned>(2 * r));
  const double log2_c = std::log2(static_cast<double>(c));
  const double alpha = to_double(out.alpha);
  out.log2_a = 8.0 * r * k / alpha * log2_c;
  out.log2_t = std::max(std::log2(3.0), (2.0 / to_double(out.epsilon)) *
                                            (2.0 * r * log2_c + (1 + alpha) * (1 + alpha) * out.log2_a));
  out.t_expression = "t = max(3, (c^(2r) * a^((1+alpha)^2))^(2/eps)), a = c^(8rk/alpha), c=" + std::to_string(c) +
                     ", r=" + std::to_string(r) + ", k=" + std::to_string(k) + ", alpha=" + to_string(out.alpha) +
                     ", eps=" + to_string(out.epsilon);
  if (out.log2_t <= 31)
    out.t = BigInt(static_cast<long long>(std::ceil(std::exp2(out.log2_t))));

  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  out.level = ln_n <= 1 ? 1 : static_cast<int>(std::ceil(std::log(ln_n) / std::log1p(alpha))) + 1;

  // n_i from the unrounded schedule, in log2 space.
  out.monotone = true;
  double log2_ni = out.log2_t;
  for (int i = 1; i <= out.level; ++i) {
    if (i >= 2) {
      const double s = std::ceil(4.0 / alpha * std::pow(1 + alpha, i) * r * k);
      log2_ni = delta == 0 ? std::numeric_limits<double>::infinity()
                           : (log2_ni - (s + 2 * r) * log2_c) / to_double(delta);
    }
    if (log2_ni < std::pow(1 + alpha, i - 1) * out.log2_t * (1 - 1e-12))
      out.monotone = false;
  }
  out.covers_n = log2_ni >= std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));

  out.params.alpha = out.alpha;
  out.params.delta = delta;
  out.params.c = c;
  out.params.r = r;
  out.params.k = k;
  out.params.t = out.t ? *out.t : kTwoPow31 + 1;
  return out;
}

} // namespace thin
