#include "thin/separator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace thin {

namespace {

struct Candidate {
  std::vector<Vertex> left, right, separator;
};

// Splits the components of G - sep into two sides, each at most 2n/3,
// minimising the larger side (exact subset sum over component sizes).
std::optional<Candidate> split(const Graph &g, const std::vector<Vertex> &sep) {
  const std::size_t n = g.num_vertices();
  auto rest = remove_vertices(g, sep);
  auto comps = connected_components(rest.graph);
  std::size_t total = n - sep.size();

  // reach[i][s]: some subset of the first i components sums to s.
  std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t s = 0; s <= total; ++s)
      if (reach[i][s]) {
        reach[i + 1][s] = 1;
        reach[i + 1][s + comps[i].size()] = 1;
      }
  std::optional<std::size_t> best;
  for (std::size_t s = 0; s <= total; ++s) {
    if (!reach[comps.size()][s])
      continue;
    std::size_t other = total - s;
    if (3 * s > 2 * n || 3 * other > 2 * n)
      continue;
    if (!best || std::max(s, other) < std::max(*best, total - *best))
      best = s;
  }
  if (!best)
    return std::nullopt;

  Candidate c;
  c.separator = sep;
  std::size_t s = *best;
  for (std::size_t i = comps.size(); i-- > 0;) {
    bool take = s >= comps[i].size() && reach[i][s - comps[i].size()];
    auto &side = take ? c.left : c.right;
    for (Vertex v : comps[i])
      side.push_back(rest.to_parent[static_cast<std::size_t>(v)]);
    if (take)
      s -= comps[i].size();
  }
  c.left.insert(c.left.end(), sep.begin(), sep.end());
  c.right.insert(c.right.end(), sep.begin(), sep.end());
  std::sort(c.left.begin(), c.left.end());
  std::sort(c.right.begin(), c.right.end());
  return c;
}

Separation finish(Candidate c, bool exact, int budget) {
  Separation s;
  s.left = std::move(c.left);
  s.right = std::move(c.right);
  s.separator = std::move(c.separator);
  std::sort(s.separator.begin(), s.separator.end());
  s.exact = exact;
  s.within_budget = budget >= 0 && s.separator.size() <= static_cast<std::size_t>(budget);
  return s;
}

Candidate trivial(const Graph &g) {
  Candidate c;
  c.left.resize(g.num_vertices());
  std::iota(c.left.begin(), c.left.end(), 0);
  c.right = c.left;
  c.separator = c.left;
  return c;
}

std::optional<Candidate> exact_search(const Graph &g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t size = 0; size < n; ++size) {
    // Combinations of `size` vertices in lexicographic order.
    std::vector<Vertex> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (auto c = split(g, pick))
        return c;
      std::size_t i = size;
      while (i > 0 && static_cast<std::size_t>(pick[i - 1]) == n - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Candidate> layer_heuristic(const Graph &g) {
  const std::size_t n = g.num_vertices();
  std::optional<Candidate> best = split(g, {});
  if (best)
    return best;
  const std::size_t starts = std::min<std::size_t>(n, 32);
  for (std::size_t t = 0; t < starts; ++t) {
    Vertex start = static_cast<Vertex>(t * n / starts);
    auto dist = bfs_distances(g, std::span<const Vertex>(&start, 1));
    int depth = *std::max_element(dist.begin(), dist.end());
    for (int d = 0; d <= depth; ++d) {
      std::vector<Vertex> layer;
      for (std::size_t v = 0; v < n; ++v)
        if (dist[v] == d)
          layer.push_back(static_cast<Vertex>(v));
      if (best && layer.size() >= best->separator.size())
        continue;
      if (auto c = split(g, layer))
        best = std::move(c);
    }
  }
  return best;
}

} // namespace

std::vector<Vertex> Separation::left_only() const {
  std::vector<Vertex> out;
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> Separation::right_only() const {
  std::vector<Vertex> out;
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(), std::back_inserter(out));
  return out;
}

bool is_balanced(const Separation &s, std::size_t n) {
  return 3 * s.left_only().size() <= 2 * n && 3 * s.right_only().size() <= 2 * n;
}

bool is_separation(const Graph &g, const Separation &s) {
  const std::size_t n = g.num_vertices();
  std::vector<int> side(n, 0);
  for (Vertex v : s.left)
    side[static_cast<std::size_t>(v)] |= 1;
  for (Vertex v : s.right)
    side[static_cast<std::size_t>(v)] |= 2;
  if (std::any_of(side.begin(), side.end(), [](int x) { return x == 0; }))
    return false;
  for (auto [u, v] : g.edges()) {
    int a = side[static_cast<std::size_t>(u)], b = side[static_cast<std::size_t>(v)];
    if ((a == 1 && b == 2) || (a == 2 && b == 1))
      return false;
  }
  return true;
}

Separation balanced_separator(const Graph &g, int budget) {
  const std::size_t n = g.num_vertices();
  if (n <= kExactSeparatorLimit) {
    if (auto c = exact_search(g))
      return finish(std::move(*c), true, budget);
    return finish(trivial(g), true, budget);
  }
  if (auto c = layer_heuristic(g))
    return finish(std::move(*c), false, budget);
  return finish(trivial(g), false, budget);
}

} // namespace thin
