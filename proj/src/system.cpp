#include "thin/system.hpp"

#include <algorithm>

#include "thin/error.hpp"

namespace thin {

namespace {

constexpr std::size_t kMaxReplicatedSize = std::size_t{1} << 22;

void require_shared(const std::vector<OverlaySystem> &systems) {
  if (systems.empty())
    throw Error("system.empty", "no systems given");
  const auto &a = systems.front();
  for (const auto &s : systems)
    if (s.kind != a.kind || s.r != a.r || s.host_hash != a.host_hash || s.host_n != a.host_n)
      throw Error("system.host_mismatch", "systems must share host, kind and radius");
}

OverlaySystem shell_like(const OverlaySystem &s) {
  OverlaySystem out;
  out.kind = s.kind;
  out.r = s.r;
  out.host_hash = s.host_hash;
  out.host_n = s.host_n;
  return out;
}

} // namespace

Thickness system_thickness(const OverlaySystem &s) {
  if (s.members.empty())
    throw Error("system.empty", "thickness of an empty system");
  std::vector<long long> sum(s.host_n, 0);
  for (const auto &m : s.members)
    for (Vertex v : m.f)
      ++sum[static_cast<std::size_t>(v)];
  Thickness t;
  t.per_vertex.reserve(s.host_n);
  const auto size = static_cast<long long>(s.members.size());
  long long top = 0;
  for (std::size_t v = 0; v < s.host_n; ++v) {
    t.per_vertex.emplace_back(sum[v], size);
    top = std::max(top, sum[v]);
  }
  t.max = Rational(top, size);
  return t;
}

std::vector<int> thin_member_counts(const OverlaySystem &s) {
  std::vector<int> count(s.host_n, 0);
  for (const auto &m : s.members) {
    auto fib = fibre_sizes(m);
    for (std::size_t v = 0; v < s.host_n; ++v)
      count[v] += fib[v] == 1 ? 1 : 0;
  }
  return count;
}

SystemCheck validate_system(const OverlaySystem &s, const Host &host) {
  SystemCheck check;
  auto fail = [&](int member, std::string message) {
    check.ok = false;
    check.member = member;
    check.message = std::move(message);
    return check;
  };
  if (s.members.empty())
    return fail(-1, "empty system");
  if (s.host_hash != host.hash())
    return fail(-1, "system belongs to a different host");
  const Host checked = (s.kind == OverlayKind::Star && !host.star) ? host.starred() : host;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    const auto &m = s.members[i];
    if (m.kind != s.kind || m.r != s.r || m.host_hash != s.host_hash || m.host_n != s.host_n)
      return fail(static_cast<int>(i), "member disagrees with the system on host, kind or radius");
    auto oc = verify_overlay(m, checked);
    if (!oc.ok) {
      check.overlay = oc;
      return fail(static_cast<int>(i), "member violates " + oc.clause + ": " + oc.message);
    }
    if (m.td.width() > s.declared_tw)
      return fail(static_cast<int>(i), "member width " + std::to_string(m.td.width()) + " exceeds declared " +
                                           std::to_string(s.declared_tw));
  }
  auto t = system_thickness(s);
  if (t.max > s.declared_thickness)
    return fail(-1, "thickness " + to_string(t.max) + " exceeds declared " + to_string(s.declared_thickness));
  return check;
}

OverlaySystem trivial_system(const Host &host, int r) {
  OverlaySystem s;
  s.kind = OverlayKind::S;
  s.r = r;
  s.host_hash = host.hash();
  s.host_n = host.base.num_vertices();
  s.members.push_back(trivial_overlay(host, r));
  s.declared_tw = std::max(0, s.members.front().td.width());
  s.declared_thickness = 1;
  return s;
}

OverlaySystem as_kind_a(OverlaySystem s) {
  if (s.kind == OverlayKind::Star)
    throw Error("overlay.bad_kind", "a ★ system cannot be relabelled as kind A");
  s.kind = OverlayKind::A;
  for (auto &m : s.members)
    m.kind = OverlayKind::A;
  return s;
}

OverlaySystem compose_systems(const std::vector<OverlaySystem> &systems) {
  require_shared(systems);
  if (systems.size() == 1)
    return systems.front();
  const std::size_t a = systems.front().size();
  for (const auto &s : systems)
    if (s.size() != a)
      throw Error("system.size_mismatch", "composed systems must have equal sizes (replicate first)");
  OverlaySystem out = shell_like(systems.front());
  out.declared_thickness = 0;
  for (const auto &s : systems) {
    out.declared_tw = std::max(out.declared_tw, s.declared_tw);
    out.declared_thickness += s.declared_thickness;
  }
  std::vector<Overlay> parts(systems.size());
  for (std::size_t j = 0; j < a; ++j) {
    for (std::size_t i = 0; i < systems.size(); ++i)
      parts[i] = systems[i].members[j];
    out.members.push_back(compose_overlays(parts));
  }
  return out;
}

std::vector<OverlaySystem> replicate_equal_size(const std::vector<OverlaySystem> &systems, int k) {
  if (k < 1)
    throw Error("system.bad_k", "k must be positive");
  const Rational limit = Rational(1) + Rational(1, 3 * k);
  std::size_t a = 0;
  for (const auto &s : systems) {
    auto t = system_thickness(s);
    if (t.max > limit)
      throw Error("system.too_thick", "input thickness " + to_string(t.max) + " exceeds " + to_string(limit));
    a = std::max(a, s.size());
  }
  const std::size_t target = static_cast<std::size_t>(3 * k) * a;
  if (target > kMaxReplicatedSize)
    throw Error("system.too_large", "replication would need " + std::to_string(target) + " members");
  std::vector<OverlaySystem> out;
  for (const auto &s : systems) {
    OverlaySystem rep = shell_like(s);
    rep.declared_tw = s.declared_tw;
    rep.declared_thickness = limit * system_thickness(s).max;
    rep.notes = s.notes;
    // Copy t of member i lands at position t*|s| + i, so the first
    // target mod |s| members get one extra copy.
    for (std::size_t t = 0; t < target; ++t)
      rep.members.push_back(s.members[t % s.size()]);
    out.push_back(std::move(rep));
  }
  return out;
}

OverlaySystem union_systems(const std::vector<OverlaySystem> &systems) {
  require_shared(systems);
  if (systems.size() == 1)
    return systems.front();
  OverlaySystem out = shell_like(systems.front());
  Rational weighted = 0;
  std::size_t total = 0;
  for (const auto &s : systems) {
    out.declared_tw = std::max(out.declared_tw, s.declared_tw);
    weighted += s.declared_thickness * static_cast<long long>(s.size());
    total += s.size();
    out.members.insert(out.members.end(), s.members.begin(), s.members.end());
  }
  out.declared_thickness = weighted / static_cast<long long>(total);
  return out;
}

OverlaySystem remap_system(const OverlaySystem &s, const std::vector<Vertex> &map, const Host &host) {
  OverlaySystem out = s;
  out.host_hash = host.hash();
  out.host_n = host.overlaid(s.kind).num_vertices();
  for (auto &m : out.members)
    m = remap_host(m, map, host);
  return out;
}

OverlaySystem component_lift(const Host &host, const std::vector<OverlaySystem> &component_systems, int k) {
  auto comps = connected_components(host.base);
  if (comps.size() != component_systems.size())
    throw Error("system.component_mismatch", "expected one system per component");
  if (comps.size() == 1 && component_systems.front().host_hash == host.hash())
    return component_systems.front();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto sub = induced_subgraph(host.base, comps[i]);
    if (component_systems[i].host_hash != sub.graph.content_hash())
      throw Error("system.component_mismatch", "system " + std::to_string(i) + " is not over component " +
                                                   std::to_string(i));
  }
  auto replicated = replicate_equal_size(component_systems, k);
  std::vector<OverlaySystem> lifted;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto sub = induced_subgraph(host.base, comps[i]);
    Host sub_host = host.star ? Host::with_star(sub.graph) : Host::plain(sub.graph);
    lifted.push_back(remap_system(replicated[i], embedding_map(sub_host, sub, host, replicated[i].kind), host));
  }
  auto out = compose_systems(lifted);
  // Components are vertex-disjoint, so fibres never add up across them.
  out.declared_thickness = 0;
  for (const auto &s : lifted)
    out.declared_thickness = std::max(out.declared_thickness, s.declared_thickness);
  return out;
}

std::size_t total_overlay_vertices(const OverlaySystem &s) {
  std::size_t total = 0;
  for (const auto &m : s.members)
    total += m.h.num_vertices();
  return total;
}

int max_member_width(const OverlaySystem &s) {
  int w = 0;
  for (const auto &m : s.members)
    w = std::max(w, m.td.width());
  return w;
}

} // namespace thin
