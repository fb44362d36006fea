#pragma once

#include <string>
#include <vector>

#include "thin/rational.hpp"
#include "thin/solvers.hpp"
#include "thin/system.hpp"

namespace thin {

struct PtasReport {
  /// "distance_independent", "r_dominating" or "clique_cover".
  std::string problem;
  int r = 1;
  int k = 1;
  /// Near-monotonicity constant (distance independence) or clique size.
  int s = 0;
  Rational epsilon;
  /// Certified factor against OPT: 1 - (s+1)/k or 1 + 1/k.
  Rational guarantee;
  std::vector<Vertex> solution;
  int value = 0;
  int chosen_overlay = -1;
  std::vector<int> per_overlay;
  std::size_t system_size = 0;
  Rational max_thickness;
  int tw_bound = 0;
  bool feasible = false;
  double wall_ms = 0;
};

/// S_L = {v : θ_L(v) = 1}; best f-image of a maximum distance-r independent
/// subset of f^{-1}(S_L). System of kind A or S with radius >= r-1.
PtasReport ptas_max_distance_independent(const Host &host, const OverlaySystem &sys, int r, int k,
                                         SolveMethod method = SolveMethod::Auto);

/// Targets {x : level(x) = r}; smallest deduplicated f-image of a minimum
/// r-dominating set of the targets. System of kind A or S with radius r.
PtasReport ptas_min_r_dominating(const Host &host, const OverlaySystem &sys, int r, int k,
                                 SolveMethod method = SolveMethod::Auto);

/// ★ system of radius 1; targets are level-1 fibre vertices over stars of
/// s-cliques, solved as neighbourhood hitting.
PtasReport ptas_s_clique_cover(const Host &host, const OverlaySystem &sys, int s, int k,
                               SolveMethod method = SolveMethod::Auto);

/// For every vertex, members with fibre size above one, times k, must not
/// exceed the system size. Throws "ptas.counting_bound".
void check_counting_bound(const OverlaySystem &sys, int k);

/// Host-side certificates.
bool is_distance_independent(const Graph &g, const std::vector<Vertex> &x, int r);
bool is_r_dominating(const Graph &g, const std::vector<Vertex> &x, int r);
bool hits_all_cliques(const Graph &g, const std::vector<Vertex> &x, int s);

} // namespace thin
