#include "thin/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "thin/error.hpp"
#include "thin/separator.hpp"

namespace thin {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto &b : bags)
    w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int TreeDecomposition::adhesion() const {
  int a = 0;
  for (std::size_t u = 0; u < bags.size(); ++u) {
    if (parent[u] < 0)
      continue;
    const auto &p = bags[static_cast<std::size_t>(parent[u])];
    std::vector<Vertex> common;
    std::set_intersection(bags[u].begin(), bags[u].end(), p.begin(), p.end(), std::back_inserter(common));
    a = std::max(a, static_cast<int>(common.size()));
  }
  return a;
}

int TreeDecomposition::root() const {
  for (std::size_t u = 0; u < parent.size(); ++u)
    if (parent[u] < 0)
      return static_cast<int>(u);
  return -1;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
  std::vector<std::vector<int>> out(bags.size());
  for (std::size_t u = 0; u < parent.size(); ++u)
    if (parent[u] >= 0)
      out[static_cast<std::size_t>(parent[u])].push_back(static_cast<int>(u));
  return out;
}

std::vector<int> TreeDecomposition::depths() const {
  std::vector<int> depth(bags.size(), -1);
  auto kids = children();
  std::vector<int> stack;
  if (int r = root(); r >= 0) {
    depth[static_cast<std::size_t>(r)] = 0;
    stack.push_back(r);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int c : kids[static_cast<std::size_t>(u)]) {
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(u)] + 1;
      stack.push_back(c);
    }
  }
  return depth;
}

int max_vertex_subtree_depth(const TreeDecomposition &td, std::size_t n) {
  auto depth = td.depths();
  std::vector<int> lo(n, -1), hi(n, -1);
  for (std::size_t u = 0; u < td.bags.size(); ++u)
    for (Vertex v : td.bags[u]) {
      auto vi = static_cast<std::size_t>(v);
      if (lo[vi] < 0 || depth[u] < lo[vi])
        lo[vi] = depth[u];
      hi[vi] = std::max(hi[vi], depth[u]);
    }
  int a = 0;
  for (std::size_t v = 0; v < n; ++v)
    a = std::max(a, hi[v] - lo[v]);
  return a;
}

TdCheck check_decomposition(const Graph &g, const TreeDecomposition &td) {
  const std::size_t n = g.num_vertices();
  const std::size_t b = td.bags.size();
  auto fail = [](std::string why) { return TdCheck{false, std::move(why)}; };
  if (td.parent.size() != b)
    return fail("parent array size differs from bag count");
  if (b == 0)
    return n == 0 ? TdCheck{} : fail("no bags");

  int roots = 0;
  for (std::size_t u = 0; u < b; ++u) {
    if (td.parent[u] < 0)
      ++roots;
    else if (static_cast<std::size_t>(td.parent[u]) >= b || td.parent[u] == static_cast<int>(u))
      return fail("bag " + std::to_string(u) + " has an invalid parent");
  }
  if (roots != 1)
    return fail(std::to_string(roots) + " roots");
  auto depth = td.depths();
  for (std::size_t u = 0; u < b; ++u)
    if (depth[u] < 0)
      return fail("bag " + std::to_string(u) + " is not connected to the root");

  std::vector<std::vector<int>> bags_of(n);
  for (std::size_t u = 0; u < b; ++u) {
    if (!std::is_sorted(td.bags[u].begin(), td.bags[u].end()) ||
        std::adjacent_find(td.bags[u].begin(), td.bags[u].end()) != td.bags[u].end())
      return fail("bag " + std::to_string(u) + " is not a sorted set");
    for (Vertex v : td.bags[u]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        return fail("bag " + std::to_string(u) + " holds vertex " + std::to_string(v) + " outside the graph");
      bags_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    }
  }

  // A vertex's bags form a connected subtree iff exactly one of them has a
  // parent bag not containing the vertex (or is the root).
  for (std::size_t v = 0; v < n; ++v) {
    if (bags_of[v].empty())
      return fail("vertex " + std::to_string(v) + " is in no bag");
    int tops = 0;
    for (int u : bags_of[v]) {
      int p = td.parent[static_cast<std::size_t>(u)];
      if (p < 0 || !std::binary_search(td.bags[static_cast<std::size_t>(p)].begin(),
                                       td.bags[static_cast<std::size_t>(p)].end(), static_cast<Vertex>(v)))
        ++tops;
    }
    if (tops != 1)
      return fail("bags of vertex " + std::to_string(v) + " are not connected");
  }

  for (auto [u, v] : g.edges()) {
    const auto &a = bags_of[static_cast<std::size_t>(u)];
    const auto &c = bags_of[static_cast<std::size_t>(v)];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(common));
    if (common.empty())
      return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }

  if (td.vertex_depth_bound) {
    int a = max_vertex_subtree_depth(td, n);
    if (a > *td.vertex_depth_bound)
      return fail("vertex subtree depth " + std::to_string(a) + " exceeds declared bound " +
                  std::to_string(*td.vertex_depth_bound));
  }
  return {};
}

void validate_decomposition(const Graph &g, const TreeDecomposition &td) {
  auto check = check_decomposition(g, td);
  if (!check.ok)
    throw Error("td.invalid", check.reason);
}

TreeDecomposition reroot(const TreeDecomposition &td, int new_root) {
  const std::size_t b = td.bags.size();
  std::vector<std::vector<int>> adj(b);
  for (std::size_t u = 0; u < b; ++u)
    if (td.parent[u] >= 0) {
      adj[u].push_back(td.parent[u]);
      adj[static_cast<std::size_t>(td.parent[u])].push_back(static_cast<int>(u));
    }
  TreeDecomposition out;
  out.bags = td.bags;
  out.parent.assign(b, -1);
  std::vector<char> seen(b, 0);
  std::vector<int> stack{new_root};
  seen[static_cast<std::size_t>(new_root)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        out.parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
  }
  if (td.vertex_depth_bound) {
    std::size_t n = 0;
    for (const auto &bag : td.bags)
      if (!bag.empty())
        n = std::max(n, static_cast<std::size_t>(bag.back()) + 1);
    out.vertex_depth_bound = max_vertex_subtree_depth(out, n);
  }
  return out;
}

TreeDecomposition separator_tree_decomposition(const Graph &g, int s) {
  const std::size_t n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0)
    return td;

  auto add_bag = [&td](std::vector<Vertex> bag, int parent) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    td.bags.push_back(std::move(bag));
    td.parent.push_back(parent);
    return static_cast<int>(td.bags.size()) - 1;
  };

  // Decomposes G[part] below `parent`; `boundary` holds the already placed
  // vertices adjacent to part.
  std::function<void(const std::vector<Vertex> &, const std::vector<Vertex> &, int)> build =
      [&](const std::vector<Vertex> &part, const std::vector<Vertex> &boundary, int parent) {
        if (part.size() == 1) {
          std::vector<Vertex> bag = boundary;
          bag.push_back(part[0]);
          add_bag(std::move(bag), parent);
          return;
        }
        auto sub = induced_subgraph(g, part);
        auto sep = balanced_separator(sub.graph, s);
        if (s >= 0 && sep.separator.size() > static_cast<std::size_t>(s)) {
          std::string where;
          for (Vertex v : part)
            where += " " + std::to_string(v);
          throw Error("td.separator_budget", "no balanced separator of size <= " + std::to_string(s) +
                                                 " found in the subgraph induced by" + where);
        }
        std::vector<Vertex> placed = boundary;
        for (Vertex v : sep.separator)
          placed.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
        int node = add_bag(placed, parent);
        if (sep.separator.size() == part.size())
          return;
        for (const auto &side : {sep.left_only(), sep.right_only()}) {
          if (side.empty())
            continue;
          std::vector<Vertex> child;
          for (Vertex v : side)
            child.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
          std::sort(child.begin(), child.end());
          std::vector<Vertex> child_boundary;
          for (Vertex p : placed) {
            bool touches = std::any_of(g.neighbors(p).begin(), g.neighbors(p).end(), [&](Vertex w) {
              return std::binary_search(child.begin(), child.end(), w);
            });
            if (touches)
              child_boundary.push_back(p);
          }
          build(child, child_boundary, node);
        }
      };

  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v)
    all[v] = static_cast<Vertex>(v);
  build(all, {}, -1);
  td.vertex_depth_bound = max_vertex_subtree_depth(td, n);
  return td;
}

TreeDecomposition elimination_tree_decomposition(const Graph &g) {
  const std::size_t n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0)
    return td;
  std::vector<std::set<Vertex>> fill(n);
  for (std::size_t v = 0; v < n; ++v)
    fill[v].insert(g.neighbors(static_cast<Vertex>(v)).begin(), g.neighbors(static_cast<Vertex>(v)).end());

  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v)
    queue.emplace(fill[v].size(), static_cast<Vertex>(v));
  std::vector<int> step(n, -1);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> later(n);
  while (!queue.empty()) {
    Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    auto vi = static_cast<std::size_t>(v);
    step[vi] = static_cast<int>(order.size());
    order.push_back(v);
    later[vi].assign(fill[vi].begin(), fill[vi].end());
    for (Vertex a : later[vi]) {
      auto ai = static_cast<std::size_t>(a);
      queue.erase({fill[ai].size(), a});
      fill[ai].erase(v);
      for (Vertex b : later[vi])
        if (b != a)
          fill[ai].insert(b);
    }
    for (Vertex a : later[vi])
      queue.emplace(fill[static_cast<std::size_t>(a)].size(), a);
  }

  // Bag i belongs to the i-th eliminated vertex; its parent is the bag of
  // the earliest eliminated later neighbour. Roots of components are chained.
  td.bags.resize(n);
  td.parent.assign(n, -1);
  int previous_root = -1;
  for (std::size_t i = n; i-- > 0;) {
    Vertex v = order[i];
    auto vi = static_cast<std::size_t>(v);
    auto &bag = td.bags[i];
    bag = later[vi];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    if (later[vi].empty()) {
      td.parent[i] = previous_root;
      previous_root = static_cast<int>(i);
      continue;
    }
    int first = static_cast<int>(n);
    for (Vertex w : later[vi])
      first = std::min(first, step[static_cast<std::size_t>(w)]);
    td.parent[i] = first;
  }
  // The chain above points each root to the previously seen one, so the
  // overall root is the last eliminated vertex's bag.
  td.vertex_depth_bound = max_vertex_subtree_depth(td, n);
  return td;
}

TreeDecomposition default_tree_decomposition(const Graph &g) {
  auto sep = separator_tree_decomposition(g, -1);
  auto elim = elimination_tree_decomposition(g);
  return elim.width() < sep.width() ? elim : sep;
}

TreeDecomposition single_bag_decomposition(std::size_t n) {
  TreeDecomposition td;
  std::vector<Vertex> bag(n);
  for (std::size_t v = 0; v < n; ++v)
    bag[v] = static_cast<Vertex>(v);
  td.bags.push_back(std::move(bag));
  td.parent.push_back(-1);
  td.vertex_depth_bound = 0;
  return td;
}

Layering depth_band_layering(const Graph &g, const TreeDecomposition &td) {
  const std::size_t n = g.num_vertices();
  validate_decomposition(g, td);
  int a = td.vertex_depth_bound ? *td.vertex_depth_bound : max_vertex_subtree_depth(td, n);
  if (max_vertex_subtree_depth(td, n) > a)
    throw Error("td.depth_bound", "vertex subtree deeper than the declared bound");
  a = std::max(a, 1);

  auto depth = td.depths();
  std::vector<int> top(n, -1);
  for (std::size_t u = 0; u < td.bags.size(); ++u)
    for (Vertex v : td.bags[u]) {
      auto vi = static_cast<std::size_t>(v);
      if (top[vi] < 0 || depth[u] < top[vi])
        top[vi] = depth[u];
    }
  Layering out;
  for (std::size_t v = 0; v < n; ++v) {
    auto band = static_cast<std::size_t>(top[v] / a);
    if (out.layers.size() <= band)
      out.layers.resize(band + 1);
    out.layers[band].push_back(static_cast<Vertex>(v));
  }
  std::erase_if(out.layers, [](const auto &layer) { return layer.empty(); });
  return out;
}

} // namespace thin
