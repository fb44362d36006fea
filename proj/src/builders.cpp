#include "thin/builders.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "thin/error.hpp"

namespace thin {

namespace {

constexpr int kMaxK = 1 << 24;

int scaled_k(int k, int factor) {
  long long v = static_cast<long long>(k) * factor;
  return v > kMaxK ? kMaxK : static_cast<int>(v);
}

/// Bags containing each vertex, for locating cliques in a decomposition.
class BagIndex {
public:
  BagIndex(const TreeDecomposition &td, std::size_t n) : td_(td), of_(n) {
    for (std::size_t b = 0; b < td.bags.size(); ++b)
      for (Vertex x : td.bags[b])
        of_[static_cast<std::size_t>(x)].push_back(static_cast<int>(b));
  }

  /// Some bag containing every vertex of `set` (sorted), or -1.
  int find(const std::vector<Vertex> &set) const {
    if (set.empty())
      return td_.root();
    for (int b : of_[static_cast<std::size_t>(set.front())]) {
      const auto &bag = td_.bags[static_cast<std::size_t>(b)];
      if (std::includes(bag.begin(), bag.end(), set.begin(), set.end()))
        return b;
    }
    return -1;
  }

private:
  const TreeDecomposition &td_;
  std::vector<std::vector<int>> of_;
};

/// Overlay under construction; ids are appended, bags sorted on finish.
struct Draft {
  std::vector<Vertex> f;
  std::vector<int> level;
  std::vector<Edge> edges;
  TreeDecomposition td;

  Vertex add(Vertex image, int lvl) {
    f.push_back(image);
    level.push_back(lvl);
    return static_cast<Vertex>(f.size() - 1);
  }
  int add_bag(std::vector<Vertex> bag, int parent) {
    td.bags.push_back(std::move(bag));
    td.parent.push_back(parent);
    return static_cast<int>(td.bags.size() - 1);
  }
  Overlay finish(OverlayKind kind, int r, const Host &host) {
    Overlay o;
    o.kind = kind;
    o.r = r;
    o.host_hash = host.hash();
    o.host_n = host.overlaid(kind).num_vertices();
    o.h = Graph(f.size(), edges);
    o.f = std::move(f);
    o.level = std::move(level);
    for (auto &bag : td.bags) {
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    o.td = std::move(td);
    return o;
  }
};

/// Copies o into an empty draft (f through `map`), keeping ids and bags.
Draft draft_of(const Overlay &o, const std::vector<Vertex> &map) {
  Draft d;
  for (std::size_t x = 0; x < o.h.num_vertices(); ++x)
    d.add(map[static_cast<std::size_t>(o.f[x])], o.level[x]);
  d.edges = o.h.edges();
  d.td.bags = o.td.bags;
  d.td.parent = o.td.parent;
  return d;
}

OverlaySystem shell(OverlayKind kind, int r, const Host &host) {
  OverlaySystem s;
  s.kind = kind;
  s.r = r;
  s.host_hash = host.hash();
  s.host_n = host.overlaid(kind).num_vertices();
  return s;
}

bool equal_sizes(const std::vector<OverlaySystem> &systems) {
  for (const auto &s : systems)
    if (s.size() != systems.front().size())
      return false;
  return true;
}

Rational max_thickness(const std::vector<OverlaySystem> &systems) {
  Rational t = 0;
  for (const auto &s : systems)
    t = std::max(t, system_thickness(s).max);
  return t;
}

void require_host(const OverlaySystem &s, const Host &host, const char *what) {
  if (s.host_hash != host.hash())
    throw Error("builder.host_mismatch", std::string(what) + " is not over the expected graph");
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Checks the subgraph-based clauses without the rest of verify_overlay.
bool is_subgraph_based(const Overlay &o, const Graph &g) {
  for (const auto &comp : connected_components(o.h)) {
    std::vector<Vertex> image;
    for (Vertex x : comp)
      image.push_back(o.f[static_cast<std::size_t>(x)]);
    auto distinct = sorted_unique(image);
    if (distinct.size() != image.size())
      return false;
    std::size_t inner = 0;
    for (Vertex x : comp)
      inner += o.h.degree(x);
    if (induced_subgraph(g, distinct).graph.num_edges() != inner / 2)
      return false;
  }
  return true;
}

} // namespace

Host sub_host_like(const Host &like, const Graph &g) { return like.star ? Host::with_star(g) : Host::plain(g); }

SystemBuilder trivial_builder(int r) {
  return [r](const Host &host, int) { return trivial_system(host, r); };
}

SystemBuilder star_trivial_builder(int r) {
  return [r](const Host &host, int) {
    Host h = host.starred();
    return sgbas_to_star(trivial_system(h, r), h);
  };
}

int WindowSpec::cap(int layer) const {
  if (layer < j)
    return std::max(0, r - (j - layer));
  if (layer > j + delta - 1)
    return std::max(0, r - (layer - (j + delta - 1)));
  return r;
}

Overlay cap_levels(const Overlay &o, const WindowSpec &w, const std::vector<int> &layer_of, const Host &host) {
  Overlay out = o;
  const std::size_t n = host.base.num_vertices();
  auto base_cap = [&](Vertex y) { return w.cap(layer_of[static_cast<std::size_t>(o.f[static_cast<std::size_t>(y)])]); };
  for (std::size_t x = 0; x < o.h.num_vertices(); ++x) {
    int m = 0;
    if (static_cast<std::size_t>(o.f[x]) < n) {
      m = base_cap(static_cast<Vertex>(x));
    } else {
      for (Vertex y : o.h.neighbors(static_cast<Vertex>(x)))
        m = std::max(m, base_cap(y));
    }
    out.level[x] = std::min(out.level[x], m);
  }
  return out;
}

std::vector<Window> layer_windows(const Graph &g, const Layering &l, int r, int delta) {
  if (r < 1 || delta < 2 * r)
    throw Error("builder.bad_layering", "window length must be at least 2r");
  const int d = static_cast<int>(l.depth());
  // Every layer lies in delta + 2r windows: one per residue, two for 2r of them.
  for (int i = 0; i < d; ++i) {
    std::vector<int> hits(static_cast<std::size_t>(delta), 0);
    for (int j = i - delta - r + 1; j <= i + r; ++j)
      ++hits[static_cast<std::size_t>(((j % delta) + delta) % delta)];
    if (std::count(hits.begin(), hits.end(), 2) != 2 * r || std::count(hits.begin(), hits.end(), 0) != 0)
      throw Error("builder.bad_layering", "window residues do not cover layer " + std::to_string(i));
  }
  std::vector<Window> out;
  for (int j = -delta - r + 1; j <= d - 1 + r; ++j) {
    WindowSpec spec{j, delta, r};
    std::vector<Vertex> vs;
    for (int i = std::max(0, spec.first()); i <= std::min(d - 1, spec.last()); ++i)
      vs.insert(vs.end(), l.layers[static_cast<std::size_t>(i)].begin(), l.layers[static_cast<std::size_t>(i)].end());
    if (vs.empty())
      continue;
    out.push_back(Window{spec, induced_subgraph(g, vs)});
  }
  return out;
}

OverlaySystem assemble_windows(const Host &host_in, const Layering &l, const std::vector<Window> &windows,
                               const std::vector<OverlaySystem> &systems) {
  if (windows.empty() || windows.size() != systems.size())
    throw Error("builder.bad_layering", "expected one system per window");
  const Host host = systems.front().kind == OverlayKind::Star ? host_in.starred() : host_in;
  if (!equal_sizes(systems))
    throw Error("system.size_mismatch", "window systems must have equal sizes");
  const auto layer_of = l.index_of(host.base.num_vertices());
  const OverlayKind kind = systems.front().kind;
  const int r = systems.front().r;
  const int delta = windows.front().spec.delta;

  std::map<int, std::vector<OverlaySystem>> by_residue;
  Rational declared = 0;
  int tw = 0;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto &win = windows[w];
    const auto &sys = systems[w];
    Host wh = sub_host_like(host, win.sub.graph);
    require_host(sys, wh, "window system");
    auto map = embedding_map(wh, win.sub, host, kind);
    OverlaySystem lifted = shell(kind, r, host);
    lifted.declared_tw = sys.declared_tw;
    lifted.declared_thickness = sys.declared_thickness;
    for (const auto &m : sys.members)
      lifted.members.push_back(cap_levels(remap_host(m, map, host), win.spec, layer_of, host));
    declared = std::max(declared, sys.declared_thickness);
    tw = std::max(tw, sys.declared_tw);
    by_residue[((win.spec.j % delta) + delta) % delta].push_back(std::move(lifted));
  }
  std::vector<OverlaySystem> residues;
  for (auto &[rho, parts] : by_residue)
    residues.push_back(compose_systems(parts));
  auto out = union_systems(residues);
  out.declared_tw = tw;
  out.declared_thickness = declared * (Rational(1) + Rational(2 * r, delta));
  return out;
}

OverlaySystem layering_lift(const Host &host, const Layering &l, int r, int k, const SystemBuilder &base) {
  if (r < 1 || k < 1)
    throw Error("builder.bad_param", "r and k must be positive");
  if (!verify_layering(host.base, l).ok)
    throw Error("builder.bad_layering", "edge spans non-consecutive layers");
  l.index_of(host.base.num_vertices());
  const int delta = static_cast<int>(std::min<long long>(6LL * k * r, std::numeric_limits<int>::max() / 2));
  if (static_cast<long long>(l.depth()) <= delta)
    return base(host, k);

  auto windows = layer_windows(host.base, l, r, delta);
  auto run = [&](int kk) {
    std::vector<OverlaySystem> systems;
    for (const auto &w : windows)
      systems.push_back(base(sub_host_like(host, w.sub.graph), kk));
    return systems;
  };
  auto systems = run(scaled_k(k, 2));
  std::string note;
  if (equal_sizes(systems)) {
    const Rational limit = one_plus_inverse(scaled_k(k, 2));
    if (max_thickness(systems) > limit)
      throw Error("builder.too_thick", "window system thicker than " + to_string(limit));
  } else {
    const Rational limit = one_plus_inverse(scaled_k(k, 6));
    if (max_thickness(systems) > limit)
      systems = run(scaled_k(k, 6));
    if (max_thickness(systems) > limit)
      throw Error("builder.too_thick", "window system thicker than " + to_string(limit));
    systems = replicate_equal_size(systems, scaled_k(k, 2));
    note = "layering: windows replicated to size " + std::to_string(systems.front().size());
  }
  auto out = assemble_windows(host, l, windows, systems);
  out.notes.push_back("layering: delta=" + std::to_string(delta) + " windows=" + std::to_string(windows.size()));
  if (!note.empty())
    out.notes.push_back(note);
  return out;
}

OverlaySystem apex_lift(const Host &host_in, const std::vector<Vertex> &apex_in, const OverlaySystem &sub_system) {
  if (sub_system.kind == OverlayKind::S)
    throw Error("builder.bad_kind", "apex lifting needs kind A or ★");
  const Host host = sub_system.kind == OverlayKind::Star ? host_in.starred() : host_in;
  const auto apex = sorted_unique(apex_in);
  const Graph &g = host.base;
  const std::size_t n = g.num_vertices();
  if (apex.empty()) {
    require_host(sub_system, host, "system");
    return sub_system;
  }
  if (apex.back() >= static_cast<Vertex>(n) || apex.front() < 0)
    throw Error("builder.bad_apex", "apex vertex out of range");
  const bool star = sub_system.kind == OverlayKind::Star;
  const StarGraph *hs = star ? host.overlaid_star() : nullptr;

  auto sub = remove_vertices(g, apex);
  Host sh = sub_host_like(host, sub.graph);
  require_host(sub_system, sh, "system");
  const auto map = embedding_map(sh, sub, host, sub_system.kind);
  const auto local = sub.from_parent(n);
  std::vector<int> apex_pos(n, -1);
  for (std::size_t i = 0; i < apex.size(); ++i)
    apex_pos[static_cast<std::size_t>(apex[i])] = static_cast<int>(i);

  // Host cliques meeting A, split by whether they stay inside A.
  struct Mixed {
    Vertex host_star;
    Vertex sub_star;
    std::vector<Vertex> in_apex;
  };
  std::vector<std::pair<Vertex, std::vector<Vertex>>> inside;
  std::vector<Mixed> mixed;
  if (star) {
    const StarGraph &ss = *sh.overlaid_star();
    for (std::size_t c = 0; c < hs->cliques.size(); ++c) {
      std::vector<Vertex> in_a, rest;
      for (Vertex v : hs->cliques[c]) {
        if (apex_pos[static_cast<std::size_t>(v)] >= 0)
          in_a.push_back(apex_pos[static_cast<std::size_t>(v)]);
        else
          rest.push_back(local[static_cast<std::size_t>(v)]);
      }
      const auto id = static_cast<Vertex>(n + c);
      if (in_a.empty())
        continue;
      if (rest.empty())
        inside.emplace_back(id, std::move(in_a));
      else
        mixed.push_back(Mixed{id, *ss.vertex_of(rest), std::move(in_a)});
    }
  }

  OverlaySystem out = shell(sub_system.kind, sub_system.r, host);
  out.declared_tw = sub_system.declared_tw + static_cast<int>(apex.size());
  out.declared_thickness = std::max(Rational(1), sub_system.declared_thickness);
  out.notes = sub_system.notes;
  const int r = sub_system.r;
  for (const auto &m : sub_system.members) {
    Draft d = draft_of(m, map);
    const std::size_t hn = m.h.num_vertices();
    std::vector<Vertex> copies;
    for (Vertex a : apex)
      copies.push_back(d.add(a, r));
    for (std::size_t i = 0; i < apex.size(); ++i)
      for (std::size_t j = i + 1; j < apex.size(); ++j)
        if (g.has_edge(apex[i], apex[j]))
          d.edges.emplace_back(copies[i], copies[j]);
    for (std::size_t y = 0; y < hn; ++y) {
      const Vertex fy = d.f[y];
      if (static_cast<std::size_t>(fy) >= n)
        continue;
      for (Vertex u : g.neighbors(fy))
        if (int i = apex_pos[static_cast<std::size_t>(u)]; i >= 0)
          d.edges.emplace_back(copies[static_cast<std::size_t>(i)], static_cast<Vertex>(y));
    }
    if (d.td.bags.empty())
      d.add_bag({}, -1);
    for (auto &bag : d.td.bags)
      bag.insert(bag.end(), copies.begin(), copies.end());
    const int root = d.td.root();

    if (star) {
      for (const auto &[id, members] : inside) {
        Vertex xk = d.add(id, r);
        std::vector<Vertex> bag{xk};
        for (int i : members) {
          d.edges.emplace_back(copies[static_cast<std::size_t>(i)], xk);
          bag.push_back(copies[static_cast<std::size_t>(i)]);
        }
        d.add_bag(std::move(bag), root);
      }
      std::vector<std::vector<Vertex>> fibre(m.host_n);
      for (std::size_t x = 0; x < hn; ++x)
        fibre[static_cast<std::size_t>(m.f[x])].push_back(static_cast<Vertex>(x));
      BagIndex bags(m.td, hn);
      for (const auto &mk : mixed) {
        for (Vertex x : fibre[static_cast<std::size_t>(mk.sub_star)]) {
          std::vector<Vertex> closed(m.h.neighbors(x).begin(), m.h.neighbors(x).end());
          closed.push_back(x);
          std::sort(closed.begin(), closed.end());
          const int at = bags.find(closed);
          if (at < 0)
            throw Error("builder.not_simplicial", "star fibre " + std::to_string(x) + " is not simplicial");
          Vertex xp = d.add(mk.host_star, m.level[static_cast<std::size_t>(x)]);
          std::vector<Vertex> bag{xp};
          for (Vertex y : m.h.neighbors(x)) {
            d.edges.emplace_back(xp, y);
            bag.push_back(y);
          }
          for (int i : mk.in_apex) {
            d.edges.emplace_back(xp, copies[static_cast<std::size_t>(i)]);
            bag.push_back(copies[static_cast<std::size_t>(i)]);
          }
          d.add_bag(std::move(bag), at);
        }
      }
    }
    out.members.push_back(d.finish(sub_system.kind, r, host));
  }
  return out;
}

OverlaySystem rooted_system(const Host &host_in, const std::vector<Vertex> &apex_in, int k, const SystemBuilder &builder) {
  auto sys = builder(host_in, k);
  require_host(sys, host_in, "builder output");
  const Host host = sys.kind == OverlayKind::Star ? host_in.starred() : host_in;
  if (sys.kind == OverlayKind::S)
    sys = as_kind_a(std::move(sys));
  const auto apex = sorted_unique(apex_in);
  if (apex.empty())
    return sys;
  auto sub = remove_vertices(host.base, apex);
  Host sh = sub_host_like(host, sub.graph);
  OverlaySystem restricted = shell(sys.kind, sys.r, sh);
  restricted.declared_tw = sys.declared_tw;
  restricted.declared_thickness = sys.declared_thickness;
  restricted.notes = sys.notes;
  for (const auto &m : sys.members)
    restricted.members.push_back(restrict_overlay(m, host, sub, sh));
  auto out = apex_lift(host, apex, restricted);
  out.notes.push_back("rooted: |A|=" + std::to_string(apex.size()));
  return out;
}

OverlaySystem sgbas_to_star(const OverlaySystem &sys, const Host &host_in) {
  if (sys.kind == OverlayKind::Star)
    throw Error("builder.bad_kind", "system is already of kind ★");
  require_host(sys, host_in, "system");
  const Host host = host_in.starred();
  const StarGraph &hs = *host.overlaid_star();
  OverlaySystem out = shell(OverlayKind::Star, sys.r, host);
  out.declared_tw = sys.declared_tw + 1;
  out.declared_thickness = sys.declared_thickness;
  out.notes = sys.notes;
  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    const auto &m = sys.members[i];
    if (!is_subgraph_based(m, host.base))
      throw Error("builder.not_subgraph_based", "member " + std::to_string(i) + " is not subgraph-based");
    std::vector<Vertex> identity(m.host_n);
    for (std::size_t v = 0; v < m.host_n; ++v)
      identity[v] = static_cast<Vertex>(v);
    Draft d = draft_of(m, identity);
    BagIndex bags(m.td, m.h.num_vertices());
    for (const auto &comp : connected_components(m.h)) {
      auto sub = induced_subgraph(m.h, comp);
      for (const auto &q : degeneracy_and_cliques(sub.graph).cliques) {
        std::vector<Vertex> members, image;
        int lvl = 0;
        for (Vertex y : q) {
          Vertex x = sub.to_parent[static_cast<std::size_t>(y)];
          members.push_back(x);
          image.push_back(m.f[static_cast<std::size_t>(x)]);
          lvl = std::max(lvl, m.level[static_cast<std::size_t>(x)]);
        }
        auto id = hs.vertex_of(image);
        if (!id)
          throw Error("builder.not_subgraph_based", "clique image is not a clique of the host");
        const int at = bags.find(members);
        if (at < 0)
          throw Error("td.invalid", "clique not covered by a bag");
        Vertex x = d.add(*id, lvl);
        for (Vertex y : members)
          d.edges.emplace_back(x, y);
        members.push_back(x);
        d.add_bag(std::move(members), at);
      }
    }
    out.members.push_back(d.finish(OverlayKind::Star, sys.r, host));
  }
  return out;
}

void check_star_sum(const Graph &g, const StarSum &sum) {
  const std::size_t n = g.num_vertices();
  auto fail = [](const std::string &msg) { throw Error("builder.not_star_sum", msg); };
  std::vector<char> in_center(n, 0);
  for (Vertex v : sum.center) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      fail("center vertex out of range");
    in_center[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> ray_of(n, -1);
  std::vector<std::vector<Vertex>> rays;
  for (std::size_t i = 0; i < sum.rays.size(); ++i) {
    rays.push_back(sorted_unique(sum.rays[i]));
    std::vector<Vertex> attach;
    for (Vertex v : rays.back()) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        fail("ray vertex out of range");
      if (in_center[static_cast<std::size_t>(v)]) {
        attach.push_back(v);
        continue;
      }
      if (ray_of[static_cast<std::size_t>(v)] >= 0)
        fail("rays " + std::to_string(ray_of[static_cast<std::size_t>(v)]) + " and " + std::to_string(i) +
             " share vertex " + std::to_string(v) + " outside the center");
      ray_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    if (!is_clique(g, attach))
      fail("attachment of ray " + std::to_string(i) + " is not a clique");
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!in_center[v] && ray_of[v] < 0)
      fail("vertex " + std::to_string(v) + " is not covered");
  for (auto [u, v] : g.edges()) {
    const bool cu = in_center[static_cast<std::size_t>(u)], cv = in_center[static_cast<std::size_t>(v)];
    if (cu && cv)
      continue;
    if (!cu && !cv) {
      if (ray_of[static_cast<std::size_t>(u)] == ray_of[static_cast<std::size_t>(v)])
        continue;
    } else {
      const Vertex outer = cu ? v : u, inner = cu ? u : v;
      const auto &ray = rays[static_cast<std::size_t>(ray_of[static_cast<std::size_t>(outer)])];
      if (std::binary_search(ray.begin(), ray.end(), inner))
        continue;
    }
    fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies in no part");
  }
}

OverlaySystem star_sum_lift(const Host &host_in, const StarSum &sum, const OverlaySystem &center_sys,
                            const std::vector<OverlaySystem> &ray_systems) {
  const Host host = host_in.starred();
  const Graph &g = host.base;
  const std::size_t n = g.num_vertices();
  check_star_sum(g, sum);
  if (sum.center.empty())
    throw Error("builder.not_star_sum", "empty center");
  if (ray_systems.size() != sum.rays.size())
    throw Error("builder.not_star_sum", "expected one system per ray");
  if (center_sys.kind != OverlayKind::Star)
    throw Error("builder.bad_kind", "star sums need ★ systems");

  auto center_sub = induced_subgraph(g, sum.center);
  Host ch = sub_host_like(host, center_sub.graph);
  require_host(center_sys, ch, "center system");
  const auto cmap = embedding_map(ch, center_sub, host, OverlayKind::Star);
  const auto center_local = center_sub.from_parent(n);

  struct Ray {
    Subgraph sub;
    std::vector<Vertex> map;
    std::vector<Vertex> attach;    ///< local ids of center ∩ ray
    std::vector<char> removed;     ///< local overlaid ids of stars over cliques inside the attachment
    Vertex center_star = -1;       ///< v_{A} in the center's G★, -1 if A is empty
  };
  std::vector<Ray> rays;
  std::size_t c = 0;
  Rational ray_declared = 1;
  int tw = center_sys.declared_tw;
  for (std::size_t i = 0; i < sum.rays.size(); ++i) {
    const auto &rs = ray_systems[i];
    if (rs.kind != OverlayKind::Star || rs.r != center_sys.r)
      throw Error("builder.bad_kind", "ray systems must be ★ with the center's radius");
    Ray ray;
    ray.sub = induced_subgraph(g, sum.rays[i]);
    Host rh = sub_host_like(host, ray.sub.graph);
    require_host(rs, rh, "ray system");
    ray.map = embedding_map(rh, ray.sub, host, OverlayKind::Star);
    std::vector<Vertex> attach_center;
    for (std::size_t v = 0; v < ray.sub.to_parent.size(); ++v) {
      Vertex p = ray.sub.to_parent[v];
      if (center_local[static_cast<std::size_t>(p)] >= 0) {
        ray.attach.push_back(static_cast<Vertex>(v));
        attach_center.push_back(center_local[static_cast<std::size_t>(p)]);
      }
    }
    const StarGraph &rstar = *rh.overlaid_star();
    ray.removed.assign(rstar.star.num_vertices(), 0);
    for (std::size_t q = 0; q < rstar.cliques.size(); ++q)
      ray.removed[rstar.base_size() + q] =
          std::includes(ray.attach.begin(), ray.attach.end(), rstar.cliques[q].begin(), rstar.cliques[q].end());
    if (!ray.attach.empty())
      ray.center_star = *ch.overlaid_star()->vertex_of(attach_center);
    if (i == 0)
      c = rs.size();
    if (rs.size() != c)
      throw Error("system.size_mismatch", "ray systems must have equal sizes (replicate first)");
    for (std::size_t l = 0; l < rs.size(); ++l) {
      auto fib = fibre_sizes(rs.members[l]);
      for (Vertex a : ray.attach)
        if (fib[static_cast<std::size_t>(a)] != 1)
          throw Error("builder.not_rooted", "ray " + std::to_string(i) + " member " + std::to_string(l) +
                                                " has thickness " + std::to_string(fib[static_cast<std::size_t>(a)]) +
                                                " on the attachment");
    }
    ray_declared = std::max(ray_declared, rs.declared_thickness);
    tw = std::max(tw, rs.declared_tw);
    rays.push_back(std::move(ray));
  }
  if (rays.empty())
    c = 1;

  OverlaySystem out = shell(OverlayKind::Star, center_sys.r, host);
  out.declared_tw = tw;
  out.declared_thickness = center_sys.declared_thickness * ray_declared;
  out.notes = center_sys.notes;
  out.notes.push_back("star sum: rays=" + std::to_string(rays.size()) + " ray size=" + std::to_string(c));

  for (const auto &l0 : center_sys.members) {
    std::vector<std::vector<Vertex>> fibre0(l0.host_n);
    for (std::size_t x = 0; x < l0.h.num_vertices(); ++x)
      fibre0[static_cast<std::size_t>(l0.f[x])].push_back(static_cast<Vertex>(x));
    BagIndex bags0(l0.td, l0.h.num_vertices());
    for (std::size_t l = 0; l < c; ++l) {
      Draft d = draft_of(l0, cmap);
      if (d.td.bags.empty())
        d.add_bag({}, -1);
      for (std::size_t i = 0; i < rays.size(); ++i) {
        const Ray &ray = rays[i];
        const Overlay &li = ray_systems[i].members[l];
        const std::size_t hn = li.h.num_vertices();
        // Fibre vertex of each attachment vertex (thickness 1 there).
        std::vector<Vertex> attach_fibre;
        for (std::size_t x = 0; x < hn; ++x)
          if (std::binary_search(ray.attach.begin(), ray.attach.end(), li.f[x]))
            attach_fibre.push_back(static_cast<Vertex>(x));
        int copy_root = li.td.root();
        if (!attach_fibre.empty()) {
          copy_root = BagIndex(li.td, hn).find(attach_fibre);
          if (copy_root < 0)
            throw Error("builder.not_simplicial", "attachment fibre of ray " + std::to_string(i) + " is not in one bag");
        }
        const TreeDecomposition td = li.td.bags.empty() ? li.td : reroot(li.td, copy_root);

        // Anchors: the center fibre over v_A, or the center root once when A is empty.
        std::vector<Vertex> anchors;
        if (ray.center_star >= 0)
          anchors = fibre0[static_cast<std::size_t>(ray.center_star)];
        else
          anchors.push_back(-1);
        for (Vertex x : anchors) {
          const int anchor_level = x >= 0 ? l0.level[static_cast<std::size_t>(x)] : center_sys.r;
          int attach_bag = d.td.root();
          std::vector<Vertex> to(hn, -1);
          if (x >= 0) {
            std::vector<Vertex> closed(l0.h.neighbors(x).begin(), l0.h.neighbors(x).end());
            closed.push_back(x);
            std::sort(closed.begin(), closed.end());
            attach_bag = bags0.find(closed);
            if (attach_bag < 0)
              throw Error("builder.not_simplicial", "center fibre vertex " + std::to_string(x) + " is not simplicial");
            for (Vertex y : attach_fibre) {
              const Vertex target = ray.sub.to_parent[static_cast<std::size_t>(li.f[static_cast<std::size_t>(y)])];
              for (Vertex z : l0.h.neighbors(x))
                if (cmap[static_cast<std::size_t>(l0.f[static_cast<std::size_t>(z)])] == target)
                  to[static_cast<std::size_t>(y)] = z;
            }
          }
          for (std::size_t y = 0; y < hn; ++y) {
            const Vertex fy = li.f[y];
            if (ray.removed[static_cast<std::size_t>(fy)] ||
                std::binary_search(ray.attach.begin(), ray.attach.end(), fy))
              continue;
            to[y] = d.add(ray.map[static_cast<std::size_t>(fy)], std::min(li.level[y], anchor_level));
          }
          for (auto [u, v] : li.h.edges())
            if (to[static_cast<std::size_t>(u)] >= 0 && to[static_cast<std::size_t>(v)] >= 0)
              d.edges.emplace_back(to[static_cast<std::size_t>(u)], to[static_cast<std::size_t>(v)]);
          const int base = static_cast<int>(d.td.bags.size());
          for (std::size_t b = 0; b < td.bags.size(); ++b) {
            std::vector<Vertex> bag;
            for (Vertex y : td.bags[b])
              if (to[static_cast<std::size_t>(y)] >= 0)
                bag.push_back(to[static_cast<std::size_t>(y)]);
            d.add_bag(std::move(bag), td.parent[b] < 0 ? attach_bag : td.parent[b] + base);
          }
        }
      }
      out.members.push_back(d.finish(OverlayKind::Star, center_sys.r, host));
    }
  }
  return out;
}

OverlaySystem shadow_lift(const Host &host_in, const Layering &l, int r, int k, const SystemBuilder &layer_builder) {
  if (r < 1 || k < 1)
    throw Error("builder.bad_param", "r and k must be positive");
  const Host host = host_in.starred();
  const Graph &g = host.base;
  if (!verify_layering(g, l).ok)
    throw Error("builder.bad_layering", "edge spans non-consecutive layers");
  l.index_of(g.num_vertices());
  if (auto sc = check_shadow_complete(g, l); !sc.ok) {
    std::string msg = "layer " + std::to_string(sc.layer + 1) + " sees a component through a non-clique {";
    for (std::size_t i = 0; i < sc.attachment.size(); ++i)
      msg += (i ? "," : "") + std::to_string(sc.attachment[i] + 1);
    throw Error("builder.not_shadow_complete", msg + "}");
  }
  auto require_star = [](const OverlaySystem &s) {
    if (s.kind != OverlayKind::Star)
      throw Error("builder.bad_kind", "layer builder must produce ★ systems");
    return s;
  };
  if (l.depth() <= 1)
    return require_star(layer_builder(host, k));

  const auto &first = l.layers.front();
  StarSum sum;
  sum.center = sorted_unique(first);
  auto center_sub = induced_subgraph(g, sum.center);
  auto center = require_star(layer_builder(sub_host_like(host, center_sub.graph), scaled_k(k, 3)));

  std::vector<Vertex> suffix;
  for (std::size_t i = 1; i < l.depth(); ++i)
    suffix.insert(suffix.end(), l.layers[i].begin(), l.layers[i].end());
  auto suffix_sub = induced_subgraph(g, suffix);
  std::vector<char> in_first(g.num_vertices(), 0);
  for (Vertex v : sum.center)
    in_first[static_cast<std::size_t>(v)] = 1;

  std::vector<OverlaySystem> ray_systems;
  for (const auto &comp_local : connected_components(suffix_sub.graph)) {
    std::vector<Vertex> comp, attach;
    for (Vertex v : comp_local)
      comp.push_back(suffix_sub.to_parent[static_cast<std::size_t>(v)]);
    for (Vertex v : comp)
      for (Vertex u : g.neighbors(v))
        if (in_first[static_cast<std::size_t>(u)])
          attach.push_back(u);
    attach = sorted_unique(attach);
    std::vector<Vertex> ray = comp;
    ray.insert(ray.end(), attach.begin(), attach.end());
    ray = sorted_unique(ray);

    auto inner_sub = induced_subgraph(g, comp);
    auto inner = shadow_lift(sub_host_like(host, inner_sub.graph), restrict_layering(l, inner_sub), r,
                             scaled_k(k, 9), layer_builder);
    auto ray_sub = induced_subgraph(g, ray);
    auto ray_local = ray_sub.from_parent(g.num_vertices());
    std::vector<Vertex> apex;
    for (Vertex a : attach)
      apex.push_back(ray_local[static_cast<std::size_t>(a)]);
    ray_systems.push_back(apex_lift(sub_host_like(host, ray_sub.graph), apex, inner));
    sum.rays.push_back(std::move(ray));
  }
  if (!ray_systems.empty() && !equal_sizes(ray_systems))
    ray_systems = replicate_equal_size(ray_systems, scaled_k(k, 3));
  auto out = star_sum_lift(host, sum, center, ray_systems);
  out.notes.push_back("shadow: depth=" + std::to_string(l.depth()));
  return out;
}

} // namespace thin
