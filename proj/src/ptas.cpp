#include "thin/ptas.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "thin/error.hpp"

namespace thin {

namespace {

std::vector<Vertex> image_of(const Overlay &m, const std::vector<Vertex> &z, std::size_t base_n) {
  std::vector<Vertex> out;
  for (Vertex x : z)
    if (Vertex v = m.f[static_cast<std::size_t>(x)]; static_cast<std::size_t>(v) < base_n)
      out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_system(const Host &host, const OverlaySystem &sys, int k) {
  if (k < 1)
    throw Error("ptas.bad_param", "k must be positive");
  if (sys.host_hash != host.hash())
    throw Error("ptas.host_mismatch", "system is not over the given graph");
  if (sys.members.empty())
    throw Error("system.empty", "empty system");
  auto t = system_thickness(sys);
  if (t.max > one_plus_inverse(k))
    throw Error("ptas.too_thick", "thickness " + to_string(t.max) + " exceeds 1+1/" + std::to_string(k));
  check_counting_bound(sys, k);
}

PtasReport skeleton(const OverlaySystem &sys, std::string problem, int r, int k, int s) {
  PtasReport rep;
  rep.problem = std::move(problem);
  rep.r = r;
  rep.k = k;
  rep.s = s;
  rep.system_size = sys.size();
  rep.max_thickness = system_thickness(sys).max;
  rep.tw_bound = sys.declared_tw;
  return rep;
}

/// Solves every member, keeps the best image (ties: smallest index).
void run_members(PtasReport &rep, const OverlaySystem &sys, std::size_t base_n, bool maximize,
                 const std::function<SolveRequest(const Overlay &)> &request, SolveMethod method) {
  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    const auto &m = sys.members[i];
    auto req = request(m);
    auto res = solve(req, method);
    auto img = image_of(m, res.solution, base_n);
    const int value = static_cast<int>(img.size());
    rep.per_overlay.push_back(value);
    const bool better = rep.chosen_overlay < 0 || (maximize ? value > rep.value : value < rep.value);
    if (better) {
      rep.chosen_overlay = static_cast<int>(i);
      rep.value = value;
      rep.solution = std::move(img);
    }
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

void check_counting_bound(const OverlaySystem &sys, int k) {
  std::vector<long long> thick(sys.host_n, 0);
  for (const auto &m : sys.members) {
    auto fib = fibre_sizes(m);
    for (std::size_t v = 0; v < sys.host_n; ++v)
      thick[v] += fib[v] > 1 ? 1 : 0;
  }
  for (std::size_t v = 0; v < sys.host_n; ++v)
    if (thick[v] * k > static_cast<long long>(sys.size()))
      throw Error("ptas.counting_bound", "vertex " + std::to_string(v) + " is thick in " + std::to_string(thick[v]) +
                                             " of " + std::to_string(sys.size()) + " overlays");
}

bool is_distance_independent(const Graph &g, const std::vector<Vertex> &x, int r) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : x)
    in[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : x) {
    auto dist = bfs_distances(g, std::span<const Vertex>(&v, 1), r - 1);
    for (Vertex u : x)
      if (u != v && dist[static_cast<std::size_t>(u)] >= 0)
        return false;
  }
  return true;
}

bool is_r_dominating(const Graph &g, const std::vector<Vertex> &x, int r) {
  auto dist = bfs_distances(g, x, r);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool hits_all_cliques(const Graph &g, const std::vector<Vertex> &x, int s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : x)
    in[static_cast<std::size_t>(v)] = 1;
  for (const auto &q : degeneracy_and_cliques(g).cliques) {
    if (static_cast<int>(q.size()) != s)
      continue;
    if (std::none_of(q.begin(), q.end(), [&](Vertex v) { return in[static_cast<std::size_t>(v)]; }))
      return false;
  }
  return true;
}

PtasReport ptas_max_distance_independent(const Host &host, const OverlaySystem &sys, int r, int k,
                                         SolveMethod method) {
  const auto start = std::chrono::steady_clock::now();
  if (r < 1)
    throw Error("ptas.bad_param", "r must be positive");
  if (sys.kind == OverlayKind::Star)
    throw Error("ptas.bad_kind", "distance independence needs a kind A or S system");
  if (sys.r < r - 1)
    throw Error("ptas.bad_param", "system radius below r-1");
  check_system(host, sys, k);
  PtasReport rep = skeleton(sys, "distance_independent", r, k, 0);
  rep.epsilon = Rational(rep.s + 1, k);
  rep.guarantee = 1 - rep.epsilon;
  const std::size_t n = host.base.num_vertices();
  run_members(rep, sys, n, true, [&](const Overlay &m) {
    auto fib = fibre_sizes(m);
    SolveRequest req;
    req.h = m.h;
    req.td = m.td;
    req.problem = Problem::DistanceIndependent;
    req.r = r;
    for (std::size_t x = 0; x < m.h.num_vertices(); ++x)
      if (fib[static_cast<std::size_t>(m.f[x])] == 1)
        req.set.push_back(static_cast<Vertex>(x));
    return req;
  }, method);
  rep.feasible = is_distance_independent(host.base, rep.solution, r);
  if (!rep.feasible)
    throw Error("ptas.certificate", "solution is not distance-" + std::to_string(r) + " independent in the host");
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

PtasReport ptas_min_r_dominating(const Host &host, const OverlaySystem &sys, int r, int k, SolveMethod method) {
  const auto start = std::chrono::steady_clock::now();
  if (r < 1)
    throw Error("ptas.bad_param", "r must be positive");
  if (sys.kind == OverlayKind::Star)
    throw Error("ptas.bad_kind", "domination needs a kind A or S system");
  if (sys.r != r)
    throw Error("ptas.bad_param", "system radius must equal r");
  check_system(host, sys, k);
  PtasReport rep = skeleton(sys, "r_dominating", r, k, 0);
  rep.epsilon = Rational(1, k);
  rep.guarantee = 1 + rep.epsilon;
  const std::size_t n = host.base.num_vertices();
  run_members(rep, sys, n, false, [&](const Overlay &m) {
    SolveRequest req;
    req.h = m.h;
    req.td = m.td;
    req.problem = Problem::RDominating;
    req.r = r;
    for (std::size_t x = 0; x < m.h.num_vertices(); ++x)
      if (m.level[x] == r)
        req.set.push_back(static_cast<Vertex>(x));
    return req;
  }, method);
  rep.feasible = is_r_dominating(host.base, rep.solution, r);
  if (!rep.feasible)
    throw Error("ptas.certificate", "solution does not " + std::to_string(r) + "-dominate the host");
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

PtasReport ptas_s_clique_cover(const Host &host_in, const OverlaySystem &sys, int s, int k, SolveMethod method) {
  const auto start = std::chrono::steady_clock::now();
  if (s < 1)
    throw Error("ptas.bad_param", "s must be positive");
  if (sys.kind != OverlayKind::Star)
    throw Error("ptas.bad_kind", "clique cover needs a ★ system");
  if (sys.r != 1)
    throw Error("ptas.bad_param", "clique cover needs radius 1");
  const Host host = host_in.starred();
  check_system(host, sys, k);
  const StarGraph &star = *host.overlaid_star();
  const std::size_t n = star.base_size();
  std::vector<char> wanted(star.star.num_vertices(), 0);
  for (std::size_t q = 0; q < star.cliques.size(); ++q)
    wanted[n + q] = static_cast<int>(star.cliques[q].size()) == s;
  PtasReport rep = skeleton(sys, "clique_cover", 1, k, s);
  rep.epsilon = Rational(1, k);
  rep.guarantee = 1 + rep.epsilon;
  run_members(rep, sys, n, false, [&](const Overlay &m) {
    SolveRequest req;
    req.h = m.h;
    req.td = m.td;
    req.problem = Problem::NeighborhoodHitting;
    for (std::size_t x = 0; x < m.h.num_vertices(); ++x)
      if (wanted[static_cast<std::size_t>(m.f[x])] && m.level[x] == 1)
        req.set.push_back(static_cast<Vertex>(x));
    return req;
  }, method);
  rep.feasible = hits_all_cliques(host.base, rep.solution, s);
  if (!rep.feasible)
    throw Error("ptas.certificate", "solution misses a " + std::to_string(s) + "-clique of the host");
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

} // namespace thin
