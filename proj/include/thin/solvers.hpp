#pragma once

#include <string>
#include <vector>

#include "thin/graph.hpp"
#include "thin/tree_decomposition.hpp"

namespace thin {

enum class Problem {
  /// Max X ⊆ set, pairwise distance in h at least r.
  DistanceIndependent,
  /// Min X ⊆ V(h), every vertex of set within distance r of X.
  RDominating,
  /// Min X ⊆ V(h) meeting N(t) for every t in set.
  NeighborhoodHitting,
};

std::string to_string(Problem p);
/// "distance_independent", "r_dominating", "neighborhood_hitting";
/// throws "solver.bad_problem".
Problem parse_problem(const std::string &text);

struct SolveRequest {
  Graph h;
  /// Optional; a default decomposition is computed when empty.
  TreeDecomposition td;
  Problem problem = Problem::RDominating;
  int r = 1;
  /// Selectable set (independence) or target set (domination, hitting).
  std::vector<Vertex> set;
};

enum class SolveMethod { Auto, Dp, BruteForce };

struct SolveResult {
  /// Lexicographically smallest optimum, sorted.
  std::vector<Vertex> solution;
  int value = 0;
  /// Per-component method used ("dp", "brute", "trivial"), comma separated.
  std::string method;
};

inline constexpr int kBruteForceLimit = 20;
/// Largest bag size handled by the DPs.
inline constexpr int kDpBagLimit = 16;

/// Exact optimum, solved per component. Auto uses brute force on
/// components of at most 8 vertices, otherwise the DP, falling back to
/// brute force on components of at most kBruteForceLimit vertices when the
/// DP is too wide. Throws "solver.infeasible" (isolated hitting target),
/// "solver.too_wide", "solver.bad_request" or "solver.self_check".
SolveResult solve(const SolveRequest &req, SolveMethod method = SolveMethod::Auto);

SolveResult solve_distance_independent(const SolveRequest &req);
SolveResult solve_r_dominating(const SolveRequest &req);
SolveResult solve_neighborhood_hitting(const SolveRequest &req);

/// Exhaustive search over the whole graph (no component split), subsets
/// by size then lexicographically. Throws "solver.too_large" above
/// `max_n` vertices.
SolveResult brute_force(const SolveRequest &req, int max_n = kBruteForceLimit);

/// Direct predicate check on h; `why` receives the first violation.
bool is_feasible(const SolveRequest &req, const std::vector<Vertex> &x, std::string *why = nullptr);

/// All pairs at distance 1..p become adjacent.
Graph power_graph(const Graph &g, int p);

} // namespace thin
