#pragma once

#include <functional>
#include <vector>

#include "thin/layering.hpp"
#include "thin/system.hpp"

namespace thin {

/// Produces a system for a host at the requested k (thickness target 1+1/k).
using SystemBuilder = std::function<OverlaySystem(const Host &, int k)>;

/// Trivial system (kind S, default certificate), ignoring k.
SystemBuilder trivial_builder(int r);
/// sgbas_to_star of the trivial system.
SystemBuilder star_trivial_builder(int r);

/// Window G_j of a layering: core layers [j, j+delta-1], buffered
/// [j-r, j+delta+r-1] (0-based layer indices).
struct WindowSpec {
  int j = 0;
  int delta = 1;
  int r = 1;

  int first() const { return j - r; }
  int last() const { return j + delta + r - 1; }
  /// r inside the core, dropping by one per layer outside it.
  int cap(int layer) const;
};

/// level'(x) = min(level(x), m(x)); m from the layer of f(x), or for star
/// fibres the largest m over h-neighbours (0 without neighbours).
/// `layer_of` maps base vertices of `host` to layer indices.
Overlay cap_levels(const Overlay &o, const WindowSpec &w, const std::vector<int> &layer_of, const Host &host);

/// A non-empty window with its vertices (ascending host ids).
struct Window {
  WindowSpec spec;
  Subgraph sub;
};

/// All non-empty windows G_j, j in [-delta-r+1, d-1+r], in order of j.
/// Throws "builder.bad_layering" when delta < 2r.
std::vector<Window> layer_windows(const Graph &g, const Layering &l, int r, int delta);

/// Caps and lifts the window systems (equal sizes, one per window, each over
/// its window's host), composes them per residue j mod delta and unions the
/// residues in increasing order. Declared thickness is the largest window
/// declaration times (1 + 2r/delta).
OverlaySystem assemble_windows(const Host &host, const Layering &l, const std::vector<Window> &windows,
                               const std::vector<OverlaySystem> &systems);

/// Δ = 6kr. d <= Δ returns base(host, k). Otherwise windows get base(., 2k)
/// (thickness <= 1+1/(2k)); unequal sizes are replicated with 2k, rebuilding
/// at 6k if needed. Throws "builder.too_thick" or "builder.bad_layering".
OverlaySystem layering_lift(const Host &host, const Layering &l, int r, int k, const SystemBuilder &base);

/// Adds one copy of every apex per member (level r) wired to the preimages
/// of its neighbours; for ★ also the clique vertices over A and the mixed
/// cliques. `sub_system` is over remove_vertices(host.base, A). Width grows
/// by |A|. Kind S throws "builder.bad_kind".
OverlaySystem apex_lift(const Host &host, const std::vector<Vertex> &apex, const OverlaySystem &sub_system);

/// builder(host, k) restricted to G - A and apex-lifted back: thickness 1 on A.
OverlaySystem rooted_system(const Host &host, const std::vector<Vertex> &apex, int k, const SystemBuilder &builder);

/// Adds a vertex over v_K for every clique K inside a component image.
/// Throws "builder.not_subgraph_based".
OverlaySystem sgbas_to_star(const OverlaySystem &sys, const Host &host);

/// Center and rays as vertex sets of the host (sorted on use).
struct StarSum {
  std::vector<Vertex> center;
  std::vector<std::vector<Vertex>> rays;
};

/// Throws "builder.not_star_sum" unless the parts cover G, every edge lies
/// in one part, each center ∩ ray is a clique and rays meet only inside
/// the center.
void check_star_sum(const Graph &g, const StarSum &sum);

/// Center system over G[center], ray systems over G[ray_i], all kind ★ with
/// G★ hosts; ray systems of equal size with thickness exactly 1 on
/// center ∩ ray. Output size |center| * |ray|.
OverlaySystem star_sum_lift(const Host &host, const StarSum &sum, const OverlaySystem &center_sys,
                            const std::vector<OverlaySystem> &ray_systems);

/// Recursion over a shadow-complete layering: the first layer gets
/// layer_builder(., 3k), each suffix component becomes an apex-lifted ray
/// built at 9k. Throws "builder.not_shadow_complete".
OverlaySystem shadow_lift(const Host &host, const Layering &l, int r, int k, const SystemBuilder &layer_builder);

/// Host on an induced subgraph, with G★ when `like` has one.
Host sub_host_like(const Host &like, const Graph &g);

} // namespace thin
