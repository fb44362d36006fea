#include "thin/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>

#include "thin/error.hpp"
#include "thin/nice_decomposition.hpp"

namespace thin {

std::string to_string(Problem p) {
  switch (p) {
  case Problem::DistanceIndependent:
    return "distance_independent";
  case Problem::RDominating:
    return "r_dominating";
  case Problem::NeighborhoodHitting:
    return "neighborhood_hitting";
  }
  return "?";
}

Problem parse_problem(const std::string &text) {
  if (text == "distance_independent")
    return Problem::DistanceIndependent;
  if (text == "r_dominating")
    return Problem::RDominating;
  if (text == "neighborhood_hitting")
    return Problem::NeighborhoodHitting;
  throw Error("solver.bad_problem", "unknown problem '" + text + "'");
}

Graph power_graph(const Graph &g, int p) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const Vertex src = static_cast<Vertex>(v);
    auto dist = bfs_distances(g, std::span<const Vertex>(&src, 1), p);
    for (std::size_t u = v + 1; u < g.num_vertices(); ++u)
      if (dist[u] > 0 && dist[u] <= p)
        edges.emplace_back(src, static_cast<Vertex>(u));
  }
  return Graph(g.num_vertices(), edges);
}

namespace {

// ---- packed DP states: one 4-bit cell per bag position ----

using Key = std::uint64_t;

int cell(Key s, int pos) { return static_cast<int>((s >> (4 * pos)) & 15u); }

Key with_cell(Key s, int pos, int v) {
  return (s & ~(Key{15} << (4 * pos))) | (static_cast<Key>(v) << (4 * pos));
}

Key low_bits(Key s, int pos) { return pos == 0 ? 0 : s & (~Key{0} >> (64 - 4 * pos)); }

Key insert_cell(Key s, int pos, int v) {
  const Key high = pos >= 16 ? 0 : s >> (4 * pos);
  const Key shifted = pos + 1 >= 16 ? 0 : high << (4 * (pos + 1));
  return low_bits(s, pos) | (static_cast<Key>(v) << (4 * pos)) | shifted;
}

Key erase_cell(Key s, int pos) {
  const Key high = pos + 1 >= 16 ? 0 : s >> (4 * (pos + 1));
  return low_bits(s, pos) | (pos >= 16 ? 0 : high << (4 * pos));
}

enum : signed char { kFree = -1, kOut = 0, kIn = 1 };

using Table = std::unordered_map<Key, int>;

/// Runs a policy over a nice decomposition; nullopt when no state survives.
template <class Policy>
std::optional<int> run_dp(const Graph &g, const NiceDecomposition &nice, const Policy &policy) {
  std::vector<Table> tables(nice.nodes.size());
  auto keep = [&](Table &t, Key s, int cost) {
    auto [it, fresh] = t.emplace(s, cost);
    if (!fresh && (Policy::kMinimize ? cost < it->second : cost > it->second))
      it->second = cost;
  };
  std::vector<int> nb_pos;
  for (std::size_t u = 0; u < nice.nodes.size(); ++u) {
    const auto &node = nice.nodes[u];
    Table &out = tables[u];
    switch (node.type) {
    case NiceType::Leaf:
      out.emplace(0, 0);
      break;
    case NiceType::Introduce: {
      Table &in = tables[static_cast<std::size_t>(node.children[0])];
      const int p = static_cast<int>(std::lower_bound(node.bag.begin(), node.bag.end(), node.vertex) - node.bag.begin());
      nb_pos.clear();
      for (std::size_t q = 0; q < node.bag.size(); ++q)
        if (static_cast<int>(q) != p && g.has_edge(node.vertex, node.bag[q]))
          nb_pos.push_back(static_cast<int>(q));
      for (const auto &[s, cost] : in)
        policy.introduce(insert_cell(s, p, 0), p, node.vertex, nb_pos,
                         [&](Key ns, int delta) { keep(out, ns, cost + delta); });
      Table().swap(in);
      break;
    }
    case NiceType::Forget: {
      Table &in = tables[static_cast<std::size_t>(node.children[0])];
      const auto &child_bag = nice.nodes[static_cast<std::size_t>(node.children[0])].bag;
      const int p =
          static_cast<int>(std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
      for (const auto &[s, cost] : in)
        if (policy.forget(cell(s, p), node.vertex))
          keep(out, erase_cell(s, p), cost);
      Table().swap(in);
      break;
    }
    case NiceType::Join: {
      Table &a = tables[static_cast<std::size_t>(node.children[0])];
      Table &b = tables[static_cast<std::size_t>(node.children[1])];
      const int width = static_cast<int>(node.bag.size());
      Key mask = 0;
      for (int q = 0; q < width; ++q)
        mask |= static_cast<Key>(Policy::kPrimary) << (4 * q);
      std::unordered_map<Key, std::vector<std::pair<Key, int>>> groups;
      for (const auto &[s, cost] : b)
        groups[s & mask].emplace_back(s, cost);
      for (const auto &[s, cost] : a) {
        auto it = groups.find(s & mask);
        if (it == groups.end())
          continue;
        const int shared = policy.selected(s, width);
        for (const auto &[t, c2] : it->second)
          keep(out, s | t, cost + c2 - shared);
      }
      Table().swap(a);
      Table().swap(b);
      break;
    }
    }
  }
  const Table &top = tables[static_cast<std::size_t>(nice.root)];
  auto it = top.find(0);
  if (it == top.end())
    return std::nullopt;
  return it->second;
}

/// Cell: label (0 = selected, 1..r = distance, r+1 = beyond r) in bits 0-2,
/// witness bit 3. Adjacent labels differ by at most one.
struct DominationPolicy {
  static constexpr bool kMinimize = true;
  static constexpr unsigned kPrimary = 7;
  int r;
  const std::vector<char> &target;
  const std::vector<signed char> &forced;

  template <class Emit>
  void introduce(Key base, int p, Vertex v, const std::vector<int> &nb, Emit &&emit) const {
    const signed char fv = forced[static_cast<std::size_t>(v)];
    for (int label = 0; label <= r + 1; ++label) {
      if ((fv == kIn && label != 0) || (fv == kOut && label == 0))
        continue;
      bool ok = true;
      bool witness = label == 0 || label == r + 1;
      Key s = base;
      for (int q : nb) {
        const int lu = cell(s, q) & 7;
        if (std::abs(label - lu) > 1) {
          ok = false;
          break;
        }
        if (lu == label - 1)
          witness = true;
        if (label == lu - 1 && lu <= r)
          s |= Key{8} << (4 * q);
      }
      if (ok)
        emit(with_cell(s, p, label | (witness ? 8 : 0)), label == 0 ? 1 : 0);
    }
  }
  bool forget(int c, Vertex v) const {
    if (!(c & 8))
      return false;
    return !(target[static_cast<std::size_t>(v)] && (c & 7) == r + 1);
  }
  int selected(Key s, int width) const {
    int n = 0;
    for (int q = 0; q < width; ++q)
      n += (cell(s, q) & 7) == 0;
    return n;
  }
};

/// Cell: selected bit. Runs on the power graph.
struct IndependencePolicy {
  static constexpr bool kMinimize = false;
  static constexpr unsigned kPrimary = 1;
  const std::vector<char> &selectable;
  const std::vector<signed char> &forced;

  template <class Emit>
  void introduce(Key base, int p, Vertex v, const std::vector<int> &nb, Emit &&emit) const {
    const signed char fv = forced[static_cast<std::size_t>(v)];
    if (fv != kIn)
      emit(base, 0);
    if (fv == kOut || !selectable[static_cast<std::size_t>(v)])
      return;
    for (int q : nb)
      if (cell(base, q) & 1)
        return;
    emit(with_cell(base, p, 1), 1);
  }
  bool forget(int, Vertex) const { return true; }
  int selected(Key s, int width) const {
    int n = 0;
    for (int q = 0; q < width; ++q)
      n += cell(s, q) & 1;
    return n;
  }
};

/// Cell: selected bit 0, hit bit 1.
struct HittingPolicy {
  static constexpr bool kMinimize = true;
  static constexpr unsigned kPrimary = 1;
  const std::vector<char> &target;
  const std::vector<signed char> &forced;

  template <class Emit>
  void introduce(Key base, int p, Vertex v, const std::vector<int> &nb, Emit &&emit) const {
    const signed char fv = forced[static_cast<std::size_t>(v)];
    for (int sel = 0; sel <= 1; ++sel) {
      if ((fv == kIn && !sel) || (fv == kOut && sel))
        continue;
      bool hit = false;
      Key s = base;
      for (int q : nb) {
        hit = hit || (cell(s, q) & 1);
        if (sel)
          s |= Key{2} << (4 * q);
      }
      emit(with_cell(s, p, sel | (hit ? 2 : 0)), sel);
    }
  }
  bool forget(int c, Vertex v) const { return !target[static_cast<std::size_t>(v)] || (c & 2); }
  int selected(Key s, int width) const {
    int n = 0;
    for (int q = 0; q < width; ++q)
      n += cell(s, q) & 1;
    return n;
  }
};

std::vector<Vertex> normalized_set(const SolveRequest &req) {
  std::vector<Vertex> s = req.set;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s)
    if (v < 0 || static_cast<std::size_t>(v) >= req.h.num_vertices())
      throw Error("solver.bad_request", "set vertex " + std::to_string(v) + " out of range");
  return s;
}

void check_request(const SolveRequest &req) {
  if (req.problem != Problem::NeighborhoodHitting && req.r < 1)
    throw Error("solver.bad_request", "r must be positive");
  for (Vertex t : normalized_set(req))
    if (req.problem == Problem::NeighborhoodHitting && req.h.degree(t) == 0)
      throw Error("solver.infeasible", "target " + std::to_string(t) + " has an empty neighbourhood");
}

TreeDecomposition restrict_td(const TreeDecomposition &td, const Subgraph &sub, std::size_t parent_n) {
  auto local = sub.from_parent(parent_n);
  TreeDecomposition out;
  out.parent = td.parent;
  for (const auto &bag : td.bags) {
    std::vector<Vertex> nb;
    for (Vertex v : bag)
      if (Vertex l = local[static_cast<std::size_t>(v)]; l >= 0)
        nb.push_back(l);
    out.bags.push_back(std::move(nb));
  }
  return out;
}

/// Bags grown by every vertex within distance q; a decomposition of the
/// power graph of exponent 2q+1.
TreeDecomposition expand_bags(const Graph &g, const TreeDecomposition &td, int q) {
  TreeDecomposition out;
  out.parent = td.parent;
  for (const auto &bag : td.bags) {
    auto dist = bfs_distances(g, bag, q);
    std::vector<Vertex> nb;
    for (std::size_t v = 0; v < dist.size(); ++v)
      if (dist[v] >= 0)
        nb.push_back(static_cast<Vertex>(v));
    out.bags.push_back(std::move(nb));
  }
  return out;
}

/// DP instance of one connected component.
class ComponentDp {
public:
  ComponentDp(const SolveRequest &req, const std::vector<Vertex> &set) : req_(req) {
    const std::size_t n = req.h.num_vertices();
    in_set_.assign(n, 0);
    for (Vertex v : set)
      in_set_[static_cast<std::size_t>(v)] = 1;
    forced_.assign(n, kFree);
    graph_ = req.problem == Problem::DistanceIndependent ? power_graph(req.h, req.r - 1) : req.h;
    TreeDecomposition best = elimination_tree_decomposition(graph_);
    if (!req.td.bags.empty()) {
      TreeDecomposition given = req.problem == Problem::DistanceIndependent
                                    ? expand_bags(req.h, req.td, (req.r - 1) / 2)
                                    : req.td;
      if (given.width() < best.width())
        best = std::move(given);
    }
    nice_ = nice_decomposition(graph_, best);
  }

  bool usable() const {
    if (req_.problem == Problem::RDominating && req_.r + 1 > 7)
      return false;
    return nice_.width() + 1 <= kDpBagLimit;
  }

  std::optional<int> optimum() const {
    switch (req_.problem) {
    case Problem::RDominating:
      return run_dp(graph_, nice_, DominationPolicy{req_.r, in_set_, forced_});
    case Problem::DistanceIndependent:
      return run_dp(graph_, nice_, IndependencePolicy{in_set_, forced_});
    case Problem::NeighborhoodHitting:
      return run_dp(graph_, nice_, HittingPolicy{in_set_, forced_});
    }
    return std::nullopt;
  }

  /// Greedy forcing in increasing id order gives the lexicographically
  /// smallest optimum.
  std::vector<Vertex> lex_smallest_optimum() {
    auto opt = optimum();
    if (!opt)
      throw Error("solver.infeasible", "no feasible solution");
    std::vector<Vertex> chosen;
    for (std::size_t v = 0; v < forced_.size() && static_cast<int>(chosen.size()) < *opt; ++v) {
      if (req_.problem == Problem::DistanceIndependent && !in_set_[v]) {
        forced_[v] = kOut;
        continue;
      }
      forced_[v] = kIn;
      if (optimum() == opt)
        chosen.push_back(static_cast<Vertex>(v));
      else
        forced_[v] = kOut;
    }
    return chosen;
  }

private:
  const SolveRequest &req_;
  std::vector<char> in_set_;
  std::vector<signed char> forced_;
  Graph graph_;
  NiceDecomposition nice_;
};

/// Next combination of m indices out of n in lexicographic order.
bool next_combination(std::vector<int> &idx, int n) {
  const int m = static_cast<int>(idx.size());
  int i = m - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i)
    --i;
  if (i < 0)
    return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < m; ++j)
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

SolveResult solve_component(const SolveRequest &req, SolveMethod method) {
  const auto set = normalized_set(req);
  const auto n = static_cast<int>(req.h.num_vertices());
  SolveResult res;
  if (set.empty()) {
    res.method = "trivial";
    return res;
  }
  if (req.problem == Problem::DistanceIndependent && req.r == 1) {
    res.solution = set;
    res.value = static_cast<int>(set.size());
    res.method = "trivial";
    return res;
  }
  const bool small = n <= 8;
  if (method == SolveMethod::BruteForce || (method == SolveMethod::Auto && small))
    return brute_force(req, std::max(n, kBruteForceLimit));
  ComponentDp dp(req, set);
  if (!dp.usable()) {
    if (method == SolveMethod::Auto && n <= kBruteForceLimit)
      return brute_force(req);
    throw Error("solver.too_wide", "decomposition too wide for the DP (" + std::to_string(n) + " vertices)");
  }
  res.solution = dp.lex_smallest_optimum();
  res.value = static_cast<int>(res.solution.size());
  res.method = "dp";
  return res;
}

} // namespace

bool is_feasible(const SolveRequest &req, const std::vector<Vertex> &x, std::string *why) {
  auto fail = [&](std::string m) {
    if (why)
      *why = std::move(m);
    return false;
  };
  const std::size_t n = req.h.num_vertices();
  std::vector<char> in_x(n, 0);
  for (Vertex v : x) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      return fail("vertex " + std::to_string(v) + " out of range");
    in_x[static_cast<std::size_t>(v)] = 1;
  }
  const auto set = normalized_set(req);
  switch (req.problem) {
  case Problem::DistanceIndependent:
    for (Vertex v : x) {
      if (!std::binary_search(set.begin(), set.end(), v))
        return fail("vertex " + std::to_string(v) + " is not selectable");
      auto dist = bfs_distances(req.h, std::span<const Vertex>(&v, 1), req.r - 1);
      for (Vertex u : x)
        if (u != v && dist[static_cast<std::size_t>(u)] >= 0)
          return fail("vertices " + std::to_string(v) + " and " + std::to_string(u) + " are closer than " +
                      std::to_string(req.r));
    }
    return true;
  case Problem::RDominating: {
    auto dist = bfs_distances(req.h, x, req.r);
    for (Vertex t : set)
      if (dist[static_cast<std::size_t>(t)] < 0)
        return fail("target " + std::to_string(t) + " is not dominated");
    return true;
  }
  case Problem::NeighborhoodHitting:
    for (Vertex t : set) {
      bool hit = false;
      for (Vertex u : req.h.neighbors(t))
        hit = hit || in_x[static_cast<std::size_t>(u)];
      if (!hit)
        return fail("target " + std::to_string(t) + " is not hit");
    }
    return true;
  }
  return fail("unknown problem");
}

SolveResult brute_force(const SolveRequest &req, int max_n) {
  check_request(req);
  const int n = static_cast<int>(req.h.num_vertices());
  if (n > max_n || n > 30)
    throw Error("solver.too_large", "brute force limited to " + std::to_string(max_n) + " vertices");
  const auto set = normalized_set(req);
  auto dist = all_pairs_distances(req.h);
  using Mask = std::uint32_t;
  std::vector<Mask> need;
  std::vector<Mask> conflict(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> universe;
  switch (req.problem) {
  case Problem::RDominating:
    for (Vertex t : set) {
      Mask m = 0;
      for (int x = 0; x < n; ++x)
        if (int d = dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)]; d >= 0 && d <= req.r)
          m |= Mask{1} << x;
      need.push_back(m);
    }
    break;
  case Problem::NeighborhoodHitting:
    for (Vertex t : set) {
      Mask m = 0;
      for (Vertex u : req.h.neighbors(t))
        m |= Mask{1} << u;
      need.push_back(m);
    }
    break;
  case Problem::DistanceIndependent:
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (int d = dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; x != y && d >= 0 && d < req.r)
          conflict[static_cast<std::size_t>(x)] |= Mask{1} << y;
    break;
  }
  const bool maximize = req.problem == Problem::DistanceIndependent;
  if (maximize)
    universe = set;
  else
    for (int x = 0; x < n; ++x)
      universe.push_back(x);
  const int u = static_cast<int>(universe.size());
  auto feasible = [&](Mask m) {
    if (maximize) {
      for (int x = 0; x < n; ++x)
        if ((m >> x & 1) && (conflict[static_cast<std::size_t>(x)] & m))
          return false;
      return true;
    }
    for (Mask nd : need)
      if (!(nd & m))
        return false;
    return true;
  };
  for (int step = 0; step <= u; ++step) {
    const int m = maximize ? u - step : step;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      idx[static_cast<std::size_t>(i)] = i;
    do {
      Mask mask = 0;
      for (int i : idx)
        mask |= Mask{1} << universe[static_cast<std::size_t>(i)];
      if (feasible(mask)) {
        SolveResult res;
        for (int i : idx)
          res.solution.push_back(universe[static_cast<std::size_t>(i)]);
        res.value = m;
        res.method = "brute";
        return res;
      }
    } while (next_combination(idx, u));
  }
  throw Error("solver.infeasible", "no feasible solution");
}

SolveResult solve(const SolveRequest &req, SolveMethod method) {
  check_request(req);
  const std::size_t n = req.h.num_vertices();
  const TreeDecomposition td = req.td.bags.empty() && n > 0 ? default_tree_decomposition(req.h) : req.td;
  if (!td.bags.empty())
    validate_decomposition(req.h, td);
  const auto set = normalized_set(req);
  std::vector<char> in_set(n, 0);
  for (Vertex v : set)
    in_set[static_cast<std::size_t>(v)] = 1;

  SolveResult res;
  std::set<std::string> methods;
  for (const auto &comp : connected_components(req.h)) {
    SolveRequest part;
    auto sub = induced_subgraph(req.h, comp);
    part.problem = req.problem;
    part.r = req.r;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (in_set[static_cast<std::size_t>(comp[i])])
        part.set.push_back(static_cast<Vertex>(i));
    if (part.set.empty())
      continue;
    part.td = restrict_td(td, sub, n);
    part.h = std::move(sub.graph);
    auto r = solve_component(part, method);
    methods.insert(r.method);
    for (Vertex v : r.solution)
      res.solution.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  }
  std::sort(res.solution.begin(), res.solution.end());
  res.value = static_cast<int>(res.solution.size());
  for (const auto &m : methods)
    res.method += (res.method.empty() ? "" : ",") + m;
  if (res.method.empty())
    res.method = "trivial";
  std::string why;
  if (!is_feasible(req, res.solution, &why))
    throw Error("solver.self_check", "solver returned an infeasible set: " + why);
  return res;
}

SolveResult solve_distance_independent(const SolveRequest &req) {
  if (req.problem != Problem::DistanceIndependent)
    throw Error("solver.bad_request", "expected a distance_independent request");
  return solve(req);
}

SolveResult solve_r_dominating(const SolveRequest &req) {
  if (req.problem != Problem::RDominating)
    throw Error("solver.bad_request", "expected an r_dominating request");
  return solve(req);
}

SolveResult solve_neighborhood_hitting(const SolveRequest &req) {
  if (req.problem != Problem::NeighborhoodHitting)
    throw Error("solver.bad_request", "expected a neighborhood_hitting request");
  return solve(req);
}

} // namespace thin
