#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "thin/cliques.hpp"
#include "thin/graph.hpp"
#include "thin/tree_decomposition.hpp"

namespace thin {

enum class OverlayKind { A, S, Star };

std::string to_string(OverlayKind kind);
/// "A", "S", "star" (also accepts "★"); throws "overlay.bad_kind".
OverlayKind parse_kind(const std::string &text);

/// The graph G a system is built for, with G★ attached when ★ machinery is
/// used. Overlays of kind A/S map into `base`, ★ overlays into `star->star`.
struct Host {
  Graph base;
  std::shared_ptr<const StarGraph> star;

  static Host plain(Graph g);
  static Host with_star(Graph g, std::size_t clique_cap = kDefaultCliqueCap);

  /// G★ when kind is Star, G otherwise. Throws "overlay.no_star" if G★ is
  /// needed but absent.
  const Graph &overlaid(OverlayKind kind) const;
  /// Non-null G★ or throws "overlay.no_star".
  const StarGraph *overlaid_star() const;
  std::uint64_t hash() const { return base.content_hash(); }
  /// A copy carrying G★.
  Host starred() const;
};

/// (h, f, level) over a host; f and level are indexed by vertices of h.
/// `host_n` is the vertex count of the overlaid graph (G, or G★ for Star).
struct Overlay {
  OverlayKind kind = OverlayKind::A;
  int r = 1;
  std::uint64_t host_hash = 0;
  std::size_t host_n = 0;
  Graph h;
  std::vector<Vertex> f;
  std::vector<int> level;
  TreeDecomposition td;

  bool operator==(const Overlay &) const = default;
};

struct OverlayCheck {
  bool ok = true;
  /// host, certificate, level_range, homomorphism, walk_preserving,
  /// neighborhood, subgraph_based or simpliciality.
  std::string clause;
  std::vector<Vertex> witness;
  std::string message;
};

/// Checks every kind-appropriate clause and the certificate. Throws
/// "overlay.not_total" if f or level do not cover V(h).
OverlayCheck verify_overlay(const Overlay &o, const Host &host);

/// |f^{-1}(v)|.
int thickness_at(const Overlay &o, Vertex v);
/// Fibre size of every vertex of the overlaid graph.
std::vector<int> fibre_sizes(const Overlay &o);

/// Lifts the host walk `walk` (walk[0] == f(x)) to h. Among eligible
/// neighbours the one with the largest level, then smallest id, is taken.
/// Throws "overlay.walk_too_long", "overlay.not_a_walk" or
/// "overlay.lift_failed".
std::vector<Vertex> lift_walk(const Overlay &o, const Host &host, Vertex x, const std::vector<Vertex> &walk);

/// Overlay of the subgraph `sub` of host.base (ids local to sub), over
/// `sub_host` built on sub.graph. Vertices mapped outside sub and edges
/// mapped onto missing edges are removed. For kind Star, `sub` must be
/// induced and both hosts need G★; star vertices are renumbered into sub's
/// G★. Throws "overlay.not_subgraph".
Overlay restrict_overlay(const Overlay &o, const Host &host, const Subgraph &sub, const Host &sub_host);

/// (g, id, r) of kind S with the given certificate (validated).
Overlay trivial_overlay(const Host &host, int r, TreeDecomposition td);
/// Certificate from default_tree_decomposition.
Overlay trivial_overlay(const Host &host, int r);

/// Disjoint union in list order. A single overlay is returned unchanged;
/// otherwise member decompositions hang off a chain of empty root bags.
/// Throws "system.host_mismatch".
Overlay compose_overlays(const std::vector<Overlay> &parts);

/// Id map from the graph overlaid for `sub_host` (an induced subgraph `sub`
/// of host.base) into the one overlaid for `host`; star vertices follow
/// their cliques. Both hosts need G★ when kind is Star.
std::vector<Vertex> embedding_map(const Host &sub_host, const Subgraph &sub, const Host &host, OverlayKind kind);

/// Same overlay with f composed with `map`, now over `host`.
Overlay remap_host(const Overlay &o, const std::vector<Vertex> &map, const Host &host);

/// Removes the listed vertices of h (and their bag entries).
Overlay delete_overlay_vertices(const Overlay &o, const std::vector<Vertex> &doomed);

} // namespace thin
