#include "thin/layering.hpp"

#include <algorithm>
#include <string>

#include "thin/error.hpp"

namespace thin {

std::vector<int> Layering::index_of(std::size_t n) const {
  std::vector<int> idx(n, -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (Vertex v : layers[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error("layering.not_partition", "vertex " + std::to_string(v) + " out of range");
      if (idx[static_cast<std::size_t>(v)] >= 0)
        throw Error("layering.not_partition", "vertex " + std::to_string(v) + " in two layers");
      idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
      ++covered;
    }
  if (covered != n)
    throw Error("layering.not_partition",
                std::to_string(n - covered) + " vertices not covered by any layer");
  return idx;
}

Layering bfs_layering(const Graph &g, std::span<const Vertex> roots) {
  if (roots.empty())
    throw Error("layering.empty_roots", "bfs_layering needs at least one root");
  const std::size_t n = g.num_vertices();
  for (Vertex r : roots)
    if (r < 0 || static_cast<std::size_t>(r) >= n)
      throw Error("graph.vertex_range", "root " + std::to_string(r) + " not in graph");

  Layering out;
  auto dist = bfs_distances(g, roots);
  auto place = [&out](const std::vector<int> &d, std::size_t offset, std::size_t n) {
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] < 0)
        continue;
      std::size_t layer = offset + static_cast<std::size_t>(d[v]);
      if (out.layers.size() <= layer)
        out.layers.resize(layer + 1);
      out.layers[layer].push_back(static_cast<Vertex>(v));
    }
  };
  place(dist, 0, n);

  std::vector<char> done(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    done[v] = dist[v] >= 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (done[v])
      continue;
    Vertex start = static_cast<Vertex>(v);
    auto d = bfs_distances(g, std::span<const Vertex>(&start, 1));
    place(d, out.layers.size(), n);
    for (std::size_t w = 0; w < n; ++w)
      if (d[w] >= 0)
        done[w] = 1;
  }
  return out;
}

LayeringCheck verify_layering(const Graph &g, const Layering &l) {
  auto idx = l.index_of(g.num_vertices());
  LayeringCheck check;
  for (auto [u, v] : g.edges()) {
    int gap = idx[static_cast<std::size_t>(u)] - idx[static_cast<std::size_t>(v)];
    if (gap > 1 || gap < -1) {
      check.ok = false;
      check.violating_edge = Edge{u, v};
      return check;
    }
  }
  return check;
}

Layering restrict_layering(const Layering &l, const Subgraph &sub, bool trim) {
  std::size_t parent_n = 0;
  for (const auto &layer : l.layers)
    for (Vertex v : layer)
      parent_n = std::max(parent_n, static_cast<std::size_t>(v) + 1);
  for (Vertex v : sub.to_parent)
    parent_n = std::max(parent_n, static_cast<std::size_t>(v) + 1);
  auto local = sub.from_parent(parent_n);
  Layering out;
  out.layers.resize(l.layers.size());
  for (std::size_t i = 0; i < l.layers.size(); ++i) {
    for (Vertex v : l.layers[i])
      if (Vertex x = local[static_cast<std::size_t>(v)]; x >= 0)
        out.layers[i].push_back(x);
    std::sort(out.layers[i].begin(), out.layers[i].end());
  }
  if (trim) {
    while (!out.layers.empty() && out.layers.back().empty())
      out.layers.pop_back();
    auto first = std::find_if(out.layers.begin(), out.layers.end(),
                              [](const auto &layer) { return !layer.empty(); });
    out.layers.erase(out.layers.begin(), first);
  }
  return out;
}

ShadowCheck check_shadow_complete(const Graph &g, const Layering &l) {
  auto idx = l.index_of(g.num_vertices());
  ShadowCheck check;
  for (std::size_t i = 0; i + 1 < l.layers.size(); ++i) {
    std::vector<Vertex> suffix;
    for (std::size_t j = i + 1; j < l.layers.size(); ++j)
      suffix.insert(suffix.end(), l.layers[j].begin(), l.layers[j].end());
    auto sub = induced_subgraph(g, suffix);
    for (const auto &comp : connected_components(sub.graph)) {
      std::vector<Vertex> attachment;
      for (Vertex c : comp)
        for (Vertex w : g.neighbors(sub.to_parent[static_cast<std::size_t>(c)]))
          if (idx[static_cast<std::size_t>(w)] == static_cast<int>(i))
            attachment.push_back(w);
      std::sort(attachment.begin(), attachment.end());
      attachment.erase(std::unique(attachment.begin(), attachment.end()), attachment.end());
      if (!is_clique(g, attachment)) {
        check.ok = false;
        check.layer = static_cast<int>(i);
        for (Vertex c : comp)
          check.component.push_back(sub.to_parent[static_cast<std::size_t>(c)]);
        check.attachment = std::move(attachment);
        return check;
      }
    }
  }
  return check;
}

Layering coarsen_to_shadow_complete(const Graph &g, Layering l) {
  while (true) {
    auto check = check_shadow_complete(g, l);
    if (check.ok)
      return l;
    auto i = static_cast<std::size_t>(check.layer);
    auto &merged = l.layers[i];
    merged.insert(merged.end(), l.layers[i + 1].begin(), l.layers[i + 1].end());
    std::sort(merged.begin(), merged.end());
    l.layers.erase(l.layers.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
}

} // namespace thin
