#include "thin/overlay.hpp"

#include <algorithm>
#include <map>

#include "thin/error.hpp"

namespace thin {

std::string to_string(OverlayKind kind) {
  switch (kind) {
  case OverlayKind::A:
    return "A";
  case OverlayKind::S:
    return "S";
  case OverlayKind::Star:
    return "star";
  }
  return "?";
}

OverlayKind parse_kind(const std::string &text) {
  if (text == "A" || text == "a")
    return OverlayKind::A;
  if (text == "S" || text == "s")
    return OverlayKind::S;
  if (text == "star" || text == "Star" || text == "★")
    return OverlayKind::Star;
  throw Error("overlay.bad_kind", "unknown overlay kind '" + text + "'");
}

Host Host::plain(Graph g) { return Host{std::move(g), nullptr}; }

Host Host::with_star(Graph g, std::size_t clique_cap) {
  auto sg = std::make_shared<const StarGraph>(star_graph(g, clique_cap));
  return Host{std::move(g), std::move(sg)};
}

const Graph &Host::overlaid(OverlayKind kind) const {
  if (kind != OverlayKind::Star)
    return base;
  if (!star)
    throw Error("overlay.no_star", "host was built without G★");
  return star->star;
}

const StarGraph *Host::overlaid_star() const {
  if (!star)
    throw Error("overlay.no_star", "host was built without G★");
  return star.get();
}

Host Host::starred() const { return star ? *this : with_star(base); }

namespace {

OverlayCheck violation(std::string clause, std::vector<Vertex> witness, std::string message) {
  return OverlayCheck{false, std::move(clause), std::move(witness), std::move(message)};
}

std::string vname(Vertex x) { return std::to_string(x); }

} // namespace

OverlayCheck verify_overlay(const Overlay &o, const Host &host_in) {
  const std::size_t hn = o.h.num_vertices();
  if (o.f.size() != hn || o.level.size() != hn)
    throw Error("overlay.not_total", "f or level does not cover every vertex of h");
  if (o.host_hash != host_in.hash())
    return violation("host", {}, "overlay belongs to a different host");
  const Host host = (o.kind == OverlayKind::Star && !host_in.star) ? host_in.starred() : host_in;
  const Graph &g = host.overlaid(o.kind);
  if (o.host_n != g.num_vertices())
    return violation("host", {}, "overlay host size differs from the overlaid graph");
  for (std::size_t x = 0; x < hn; ++x)
    if (o.f[x] < 0 || static_cast<std::size_t>(o.f[x]) >= g.num_vertices())
      return violation("host", {static_cast<Vertex>(x)}, "f(" + vname(static_cast<Vertex>(x)) + ") is not a host vertex");

  for (std::size_t x = 0; x < hn; ++x)
    if (o.level[x] < 0 || o.level[x] > o.r)
      return violation("level_range", {static_cast<Vertex>(x)},
                       "level of " + vname(static_cast<Vertex>(x)) + " outside 0.." + std::to_string(o.r));

  for (auto [x, y] : o.h.edges()) {
    Vertex a = o.f[static_cast<std::size_t>(x)], b = o.f[static_cast<std::size_t>(y)];
    if (a == b || !g.has_edge(a, b))
      return violation("homomorphism", {x, y},
                       "edge " + vname(x) + "-" + vname(y) + " maps to non-edge " + vname(a) + "-" + vname(b));
  }

  // Walk preservation: for x with level >= 1, every host neighbour w of f(x)
  // needs an h-neighbour y with f(y) = w and level(y) >= level(x) - 1.
  std::vector<std::pair<Vertex, int>> best;
  for (std::size_t x = 0; x < hn; ++x) {
    int lx = o.level[x];
    if (lx < 1)
      continue;
    best.clear();
    for (Vertex y : o.h.neighbors(static_cast<Vertex>(x)))
      best.emplace_back(o.f[static_cast<std::size_t>(y)], o.level[static_cast<std::size_t>(y)]);
    std::sort(best.begin(), best.end());
    for (Vertex w : g.neighbors(o.f[x])) {
      auto it = std::upper_bound(best.begin(), best.end(), std::pair<Vertex, int>{w, o.r + 1});
      bool found = it != best.begin() && std::prev(it)->first == w && std::prev(it)->second >= lx - 1;
      if (!found)
        return violation("walk_preserving", {static_cast<Vertex>(x), w},
                         "vertex " + vname(static_cast<Vertex>(x)) + " (level " + std::to_string(lx) +
                             ") has no suitable neighbour over host vertex " + vname(w));
    }
  }

  std::vector<char> covered(g.num_vertices(), 0);
  for (std::size_t x = 0; x < hn; ++x)
    if (o.level[x] == o.r)
      covered[static_cast<std::size_t>(o.f[x])] = 1;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!covered[v])
      return violation("neighborhood", {static_cast<Vertex>(v)},
                       "host vertex " + vname(static_cast<Vertex>(v)) + " has no preimage at level " + std::to_string(o.r));

  if (o.kind == OverlayKind::S) {
    for (const auto &comp : connected_components(o.h)) {
      std::vector<Vertex> image;
      for (Vertex x : comp)
        image.push_back(o.f[static_cast<std::size_t>(x)]);
      std::sort(image.begin(), image.end());
      if (auto dup = std::adjacent_find(image.begin(), image.end()); dup != image.end())
        return violation("subgraph_based", {comp.front(), *dup},
                         "component of " + vname(comp.front()) + " maps two vertices onto " + vname(*dup));
      std::size_t h_edges = 0, g_edges = 0;
      for (Vertex x : comp)
        h_edges += o.h.degree(x);
      for (Vertex v : image)
        for (Vertex w : g.neighbors(v))
          g_edges += std::binary_search(image.begin(), image.end(), w) ? 1 : 0;
      if (h_edges != g_edges)
        return violation("subgraph_based", {comp.front()},
                         "image of the component of " + vname(comp.front()) + " is not an induced subgraph");
    }
  }

  if (o.kind == OverlayKind::Star) {
    for (std::size_t x = 0; x < hn; ++x) {
      if (!host.star->is_star_vertex(o.f[x]))
        continue;
      auto nb = o.h.neighbors(static_cast<Vertex>(x));
      if (!is_clique(o.h, nb))
        return violation("simpliciality", {static_cast<Vertex>(x)},
                         "star fibre vertex " + vname(static_cast<Vertex>(x)) + " is not simplicial");
    }
  }

  auto td_check = check_decomposition(o.h, o.td);
  if (!td_check.ok)
    return violation("certificate", {}, td_check.reason);
  return {};
}

int thickness_at(const Overlay &o, Vertex v) {
  return static_cast<int>(std::count(o.f.begin(), o.f.end(), v));
}

std::vector<int> fibre_sizes(const Overlay &o) {
  std::vector<int> out(o.host_n, 0);
  for (Vertex v : o.f)
    ++out[static_cast<std::size_t>(v)];
  return out;
}

std::vector<Vertex> lift_walk(const Overlay &o, const Host &host, Vertex x, const std::vector<Vertex> &walk) {
  const Graph &g = host.overlaid(o.kind);
  if (walk.empty() || walk[0] != o.f[static_cast<std::size_t>(x)])
    throw Error("overlay.not_a_walk", "walk must start at f(x)");
  if (static_cast<int>(walk.size()) - 1 > o.level[static_cast<std::size_t>(x)])
    throw Error("overlay.walk_too_long", "walk longer than the level of the start vertex");
  for (std::size_t i = 1; i < walk.size(); ++i)
    if (!g.has_edge(walk[i - 1], walk[i]))
      throw Error("overlay.not_a_walk", "consecutive walk vertices are not adjacent");

  std::vector<Vertex> lifted{x};
  for (std::size_t i = 1; i < walk.size(); ++i) {
    Vertex cur = lifted.back();
    int need = o.level[static_cast<std::size_t>(cur)] - 1;
    Vertex pick = -1;
    for (Vertex y : o.h.neighbors(cur)) {
      auto yi = static_cast<std::size_t>(y);
      if (o.f[yi] != walk[i] || o.level[yi] < need)
        continue;
      if (pick < 0 || o.level[yi] > o.level[static_cast<std::size_t>(pick)])
        pick = y;
    }
    if (pick < 0)
      throw Error("overlay.lift_failed", "no lift for step " + std::to_string(i) + " (overlay not walk-preserving)");
    lifted.push_back(pick);
  }
  return lifted;
}

Overlay delete_overlay_vertices(const Overlay &o, const std::vector<Vertex> &doomed) {
  const std::size_t hn = o.h.num_vertices();
  std::vector<char> drop(hn, 0);
  for (Vertex x : doomed)
    drop[static_cast<std::size_t>(x)] = 1;
  std::vector<Vertex> keep;
  for (std::size_t x = 0; x < hn; ++x)
    if (!drop[x])
      keep.push_back(static_cast<Vertex>(x));
  auto sub = induced_subgraph(o.h, keep);
  auto local = sub.from_parent(hn);

  Overlay out;
  out.kind = o.kind;
  out.r = o.r;
  out.host_hash = o.host_hash;
  out.host_n = o.host_n;
  out.h = std::move(sub.graph);
  for (Vertex x : keep) {
    out.f.push_back(o.f[static_cast<std::size_t>(x)]);
    out.level.push_back(o.level[static_cast<std::size_t>(x)]);
  }
  out.td.parent = o.td.parent;
  for (const auto &bag : o.td.bags) {
    std::vector<Vertex> nb;
    for (Vertex x : bag)
      if (Vertex y = local[static_cast<std::size_t>(x)]; y >= 0)
        nb.push_back(y);
    out.td.bags.push_back(std::move(nb));
  }
  return out;
}

Overlay restrict_overlay(const Overlay &o, const Host &host, const Subgraph &sub, const Host &sub_host) {
  const Graph &g = host.base;
  const std::size_t n = g.num_vertices();
  auto local = sub.from_parent(n);
  std::vector<Vertex> seen = sub.to_parent;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
      (!seen.empty() && (seen.front() < 0 || static_cast<std::size_t>(seen.back()) >= n)))
    throw Error("overlay.not_subgraph", "subgraph vertices are not distinct host vertices");
  for (auto [u, v] : sub.graph.edges())
    if (!g.has_edge(sub.to_parent[static_cast<std::size_t>(u)], sub.to_parent[static_cast<std::size_t>(v)]))
      throw Error("overlay.not_subgraph", "subgraph edge missing from host");

  // New id of every overlaid vertex, -1 when it is removed.
  std::vector<Vertex> remap(o.host_n, -1);
  for (std::size_t v = 0; v < n; ++v)
    remap[v] = local[v];
  if (o.kind == OverlayKind::Star) {
    if (induced_subgraph(g, sub.to_parent).graph.num_edges() != sub.graph.num_edges())
      throw Error("overlay.not_subgraph", "★ restriction needs an induced subgraph");
    const StarGraph &hs = *host.overlaid_star();
    const StarGraph &ts = *sub_host.overlaid_star();
    for (std::size_t i = 0; i < hs.cliques.size(); ++i) {
      std::vector<Vertex> k;
      for (Vertex v : hs.cliques[i]) {
        if (local[static_cast<std::size_t>(v)] < 0)
          break;
        k.push_back(local[static_cast<std::size_t>(v)]);
      }
      if (k.size() == hs.cliques[i].size())
        remap[n + i] = *ts.vertex_of(k);
    }
  }

  std::vector<Vertex> doomed;
  for (std::size_t x = 0; x < o.h.num_vertices(); ++x)
    if (remap[static_cast<std::size_t>(o.f[x])] < 0)
      doomed.push_back(static_cast<Vertex>(x));
  Overlay out = delete_overlay_vertices(o, doomed);

  std::vector<Edge> edges;
  for (auto [x, y] : out.h.edges()) {
    Vertex a = remap[static_cast<std::size_t>(out.f[static_cast<std::size_t>(x)])];
    Vertex b = remap[static_cast<std::size_t>(out.f[static_cast<std::size_t>(y)])];
    if (o.kind == OverlayKind::Star || sub.graph.has_edge(a, b))
      edges.emplace_back(x, y);
  }
  out.h = Graph(out.h.num_vertices(), edges);
  for (auto &v : out.f)
    v = remap[static_cast<std::size_t>(v)];
  out.host_hash = sub_host.hash();
  out.host_n = sub_host.overlaid(o.kind).num_vertices();
  return out;
}

Overlay trivial_overlay(const Host &host, int r, TreeDecomposition td) {
  if (r < 1)
    throw Error("overlay.bad_radius", "radius must be positive");
  validate_decomposition(host.base, td);
  Overlay o;
  o.kind = OverlayKind::S;
  o.r = r;
  o.host_hash = host.hash();
  o.host_n = host.base.num_vertices();
  o.h = host.base;
  o.f.resize(o.host_n);
  for (std::size_t v = 0; v < o.host_n; ++v)
    o.f[v] = static_cast<Vertex>(v);
  o.level.assign(o.host_n, r);
  o.td = std::move(td);
  return o;
}

Overlay trivial_overlay(const Host &host, int r) {
  return trivial_overlay(host, r, default_tree_decomposition(host.base));
}

Overlay compose_overlays(const std::vector<Overlay> &parts) {
  if (parts.empty())
    throw Error("system.empty", "nothing to compose");
  const Overlay &first = parts.front();
  for (const auto &p : parts)
    if (p.kind != first.kind || p.r != first.r || p.host_hash != first.host_hash || p.host_n != first.host_n)
      throw Error("system.host_mismatch", "composed overlays must share host, kind and radius");
  if (parts.size() == 1)
    return first;

  Overlay out;
  out.kind = first.kind;
  out.r = first.r;
  out.host_hash = first.host_hash;
  out.host_n = first.host_n;
  std::size_t total = 0;
  for (const auto &p : parts)
    total += p.h.num_vertices();
  std::vector<Edge> edges;
  out.f.reserve(total);
  out.level.reserve(total);

  // Chain bags 0..m-1 come first; member j's root hangs off chain bag j.
  const std::size_t m = parts.size();
  for (std::size_t j = 0; j < m; ++j) {
    out.td.bags.emplace_back();
    out.td.parent.push_back(j == 0 ? -1 : static_cast<int>(j) - 1);
  }
  Vertex offset = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto &p = parts[j];
    for (auto [x, y] : p.h.edges())
      edges.emplace_back(x + offset, y + offset);
    out.f.insert(out.f.end(), p.f.begin(), p.f.end());
    out.level.insert(out.level.end(), p.level.begin(), p.level.end());
    int bag_offset = static_cast<int>(out.td.bags.size());
    for (std::size_t u = 0; u < p.td.bags.size(); ++u) {
      std::vector<Vertex> bag = p.td.bags[u];
      for (auto &x : bag)
        x += offset;
      out.td.bags.push_back(std::move(bag));
      out.td.parent.push_back(p.td.parent[u] < 0 ? static_cast<int>(j) : p.td.parent[u] + bag_offset);
    }
    offset += static_cast<Vertex>(p.h.num_vertices());
  }
  out.h = Graph(total, edges);
  return out;
}

std::vector<Vertex> embedding_map(const Host &sub_host, const Subgraph &sub, const Host &host, OverlayKind kind) {
  if (kind != OverlayKind::Star)
    return sub.to_parent;
  const StarGraph &ss = *sub_host.overlaid_star();
  const StarGraph &hs = *host.overlaid_star();
  const std::size_t n = ss.base_size();
  std::vector<Vertex> map(ss.star.num_vertices());
  for (std::size_t v = 0; v < n; ++v)
    map[v] = sub.to_parent[v];
  for (std::size_t i = 0; i < ss.cliques.size(); ++i) {
    std::vector<Vertex> k;
    for (Vertex v : ss.cliques[i])
      k.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    auto id = hs.vertex_of(k);
    if (!id)
      throw Error("overlay.not_subgraph", "clique of the subgraph is not a clique of the host");
    map[n + i] = *id;
  }
  return map;
}

Overlay remap_host(const Overlay &o, const std::vector<Vertex> &map, const Host &host) {
  Overlay out = o;
  out.host_hash = host.hash();
  out.host_n = host.overlaid(o.kind).num_vertices();
  for (auto &v : out.f)
    v = map[static_cast<std::size_t>(v)];
  return out;
}

} // namespace thin
