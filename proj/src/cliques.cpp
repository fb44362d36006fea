#include "thin/cliques.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "thin/error.hpp"

namespace thin {

namespace {

// Removal order of the min-degree elimination, ties by smallest id.
std::vector<Vertex> elimination_order(const Graph &g, int &degeneracy) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    queue.emplace(deg[v], static_cast<Vertex>(v));
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  degeneracy = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    degeneracy = std::max(degeneracy, static_cast<int>(d));
    removed[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (removed[wi])
        continue;
      queue.erase({deg[wi], w});
      --deg[wi];
      queue.emplace(deg[wi], w);
    }
  }
  return order;
}

} // namespace

CliqueEnumeration degeneracy_and_cliques(const Graph &g, std::size_t cap) {
  CliqueEnumeration out;
  auto removal = elimination_order(g, out.degeneracy);
  out.ordering.assign(removal.rbegin(), removal.rend());

  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i)
    position[static_cast<std::size_t>(out.ordering[i])] = i;

  // Each clique is generated from its last vertex v and a clique among the
  // neighbours of v that precede it.
  std::vector<Vertex> current;
  auto extend = [&](auto &&self, const std::vector<Vertex> &candidates, std::size_t from) -> void {
    if (out.cliques.size() > cap)
      throw Error("graph.clique_blowup", "more than " + std::to_string(cap) + " cliques");
    out.cliques.push_back(current);
    for (std::size_t i = from; i < candidates.size(); ++i) {
      Vertex c = candidates[i];
      bool ok = std::all_of(current.begin(), current.end() - 1,
                            [&](Vertex x) { return g.has_edge(x, c); });
      if (!ok)
        continue;
      current.insert(current.end() - 1, c);
      self(self, candidates, i + 1);
      current.erase(std::find(current.begin(), current.end(), c));
    }
  };
  for (Vertex v : out.ordering) {
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(v))
      if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(v)])
        earlier.push_back(w);
    current.assign(1, v);
    extend(extend, earlier, 0);
  }
  if (out.cliques.size() > cap)
    throw Error("graph.clique_blowup", "more than " + std::to_string(cap) + " cliques");

  for (auto &k : out.cliques)
    std::sort(k.begin(), k.end());
  std::sort(out.cliques.begin(), out.cliques.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::optional<Vertex> StarGraph::vertex_of(std::vector<Vertex> clique) const {
  std::sort(clique.begin(), clique.end());
  auto it = clique_index.find(clique);
  if (it == clique_index.end())
    return std::nullopt;
  return it->second;
}

StarGraph star_graph(const Graph &g, std::size_t cap) {
  StarGraph sg;
  sg.base = g;
  sg.cliques = degeneracy_and_cliques(g, cap).cliques;
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < sg.cliques.size(); ++i) {
    auto id = static_cast<Vertex>(n + i);
    sg.clique_index.emplace(sg.cliques[i], id);
    for (Vertex v : sg.cliques[i])
      edges.emplace_back(v, id);
  }
  sg.star = Graph(n + sg.cliques.size(), edges);
  return sg;
}

} // namespace thin
