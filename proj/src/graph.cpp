#include "thin/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "thin/error.hpp"

namespace thin {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw Error("graph.vertex_range",
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside [0," +
                      std::to_string(n) + ")");
    if (u == v)
      throw Error("graph.self_loop", "self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto &list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    num_edges_ += list.size();
  }
  num_edges_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= adj_.size() ||
      static_cast<std::size_t>(v) >= adj_.size())
    return false;
  const auto &list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v)
        out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

std::uint64_t Graph::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(adj_.size());
  for (auto [u, v] : edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

std::vector<Vertex> Subgraph::from_parent(std::size_t parent_n) const {
  std::vector<Vertex> local(parent_n, -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    local[static_cast<std::size_t>(to_parent[i])] = static_cast<Vertex>(i);
  return local;
}

Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());
  for (Vertex v : sub.to_parent)
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices())
      throw Error("graph.vertex_range", "vertex " + std::to_string(v) + " not in graph");
  auto local = sub.from_parent(g.num_vertices());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      Vertex j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i))
        edges.emplace_back(static_cast<Vertex>(i), j);
    }
  sub.graph = Graph(sub.to_parent.size(), edges);
  return sub;
}

Subgraph remove_vertices(const Graph &g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : removed)
    if (v >= 0 && static_cast<std::size_t>(v) < g.num_vertices())
      gone[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!gone[v])
      keep.push_back(static_cast<Vertex>(v));
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    comps.emplace_back();
    auto &comp = comps.back();
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

std::vector<int> bfs_distances(const Graph &g, std::span<const Vertex> sources, int limit) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources)
    if (dist[static_cast<std::size_t>(s)] < 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(v)];
    if (limit >= 0 && d >= limit)
      continue;
    for (Vertex w : g.neighbors(v))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = d + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph &g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Vertex src = static_cast<Vertex>(v);
    out.push_back(bfs_distances(g, std::span<const Vertex>(&src, 1)));
  }
  return out;
}

bool is_clique(const Graph &g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j]))
        return false;
  return true;
}

} // namespace thin
