#pragma once

#include <string>
#include <vector>

#include "thin/overlay.hpp"
#include "thin/rational.hpp"

namespace thin {

/// Multiset of overlays of one host. All members share host, kind and r.
struct OverlaySystem {
  OverlayKind kind = OverlayKind::A;
  int r = 1;
  std::uint64_t host_hash = 0;
  std::size_t host_n = 0;
  std::vector<Overlay> members;
  int declared_tw = 0;
  Rational declared_thickness{1};
  /// Free-form construction notes (replication choices, schedule diagnostics).
  std::vector<std::string> notes;

  std::size_t size() const { return members.size(); }
};

struct Thickness {
  std::vector<Rational> per_vertex;
  Rational max{0};
};

/// θ(v) = (1/|𝓛|) Σ θ_L(v). Throws "system.empty".
Thickness system_thickness(const OverlaySystem &s);

/// Per vertex, the number of members with fibre size exactly one there.
std::vector<int> thin_member_counts(const OverlaySystem &s);

struct SystemCheck {
  bool ok = true;
  int member = -1;
  OverlayCheck overlay;
  std::string message;
};

/// Member validity, shared host/kind/r, widths against declared_tw and the
/// exact thickness against declared_thickness.
SystemCheck validate_system(const OverlaySystem &s, const Host &host);

/// Size-1 system holding the trivial overlay (default certificate).
OverlaySystem trivial_system(const Host &host, int r);

/// Same members relabelled as kind A (valid since S ⊂ A).
OverlaySystem as_kind_a(OverlaySystem s);

/// Member j is the composition of the j-th members. Throws
/// "system.size_mismatch" or "system.host_mismatch".
OverlaySystem compose_systems(const std::vector<OverlaySystem> &systems);

/// Replicates every system to common size 3ka (a = largest input size),
/// member copies c or c+1 times, round-robin in member order. Input
/// thickness must be at most 1 + 1/(3k) ("system.too_thick").
std::vector<OverlaySystem> replicate_equal_size(const std::vector<OverlaySystem> &systems, int k);

/// Multiset union in list order.
OverlaySystem union_systems(const std::vector<OverlaySystem> &systems);

/// Systems of the components (in connected_components order, each over its
/// own component host) replicated to equal size when sizes differ and
/// composed. Throws "system.component_mismatch".
OverlaySystem component_lift(const Host &host, const std::vector<OverlaySystem> &component_systems, int k);

/// Same system over a larger host via `map` (see embedding_map).
OverlaySystem remap_system(const OverlaySystem &s, const std::vector<Vertex> &map, const Host &host);

/// Σ_L |V(h_L)|.
std::size_t total_overlay_vertices(const OverlaySystem &s);

/// Largest member certificate width.
int max_member_width(const OverlaySystem &s);

} // namespace thin
