#pragma once

// The pointihedron graph: flip-graphs of P and P* joined by the flips that
// insert or remove the puncture, plus the routing and witness constructions
// behind its diameter and convexity bounds.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "flipforge/flipgraph.hpp"
#include "flipforge/geom_system.hpp"

namespace flipforge {

struct PointKey {
  Stratum stratum = Stratum::Plain;
  ArcSet arcs;
  bool operator==(const PointKey&) const = default;
};

}  // namespace flipforge

template <>
struct std::hash<flipforge::PointKey> {
  std::size_t operator()(const flipforge::PointKey& k) const noexcept {
    return k.arcs.hash() * 2 + (k.stratum == flipforge::Stratum::Punctured ? 1 : 0);
  }
};

namespace flipforge {

struct Pointihedron {
  PuncturedPolygon instance;
  GeomSystem plain;
  GeomSystem punctured;
  Closure<PointKey> closure;

  const FlipGraph& graph() const { return closure.graph; }
  /// Sorted vertex ids of one stratum.
  std::vector<int> stratum_vertices(Stratum s) const;
  long cross_edge_count() const;
  std::optional<int> find(Stratum s, const ArcSet& arcs) const;
  const ArcSystem& system(Stratum s) const;
};

/// Throws InputError for non-convex polygons.
Pointihedron build_pointihedron(const PuncturedPolygon& x);

/// Greedy flips from `t` to the all-radial triangulation, each adding one
/// radial (first such flip in arc order). Throws ModelError if no flip adds a
/// radial before the fan is reached.
std::vector<ArcSet> fan_walk(const ArcSystem& sys, ArcSet t);

/// Walk from u to v through the fan of a punctured arc system's graph, with
/// cycles cut out.
FlipPath route_via_fan(const Closure<ArcSet>& c, const ArcSystem& sys, int u, int v);
/// Plain endpoints are first lifted by inserting the puncture.
FlipPath route_via_fan(const Pointihedron& g, int u, int v);

struct HeptagonWitness {
  Point2 placement;
  int u = 0;  // pointihedron vertex ids
  int v = 0;
  int d_intrinsic = 0;
  int d_pointihedron = 0;
  FlipPath shortcut;  // geodesic in the pointihedron
};

/// First punctured pair, in label order, whose distance inside F(P*) is at
/// least 7 while its pointihedron distance is at most 6. Tries placements in
/// order and returns the first success.
std::optional<HeptagonWitness> heptagon_witness(const Polygon& poly, const std::vector<Point2>& placements,
                                                const std::function<void(const Pointihedron&)>& on_build = {});

/// Polygon centroid, then for each triangle of the greedy reference
/// triangulation its centroid and the midpoint between it and the polygon
/// centroid.
std::vector<Point2> default_placements(const Polygon& poly);

struct Thm62Instance {
  Point2 placement;
  int shared_vertex = 0;
  ArcSet plain_u;
  ArcSet plain_v;
  ArcSet lifted_u;
  ArcSet lifted_v;
  int plain_distance = 0;
};

/// Farthest pair (U, V) in F(P) such that an ear of U and a triangle of V have
/// overlapping interiors and exactly one common vertex; the puncture is the
/// vertex average of the overlap. Requires convex P with n >= 4.
Thm62Instance thm62_instance(const Polygon& poly);

/// Triangles of a plain triangulation as sorted vertex triples.
std::vector<std::array<int, 3>> triangles(const GeomSystem& plain, const ArcSet& t);

}  // namespace flipforge
