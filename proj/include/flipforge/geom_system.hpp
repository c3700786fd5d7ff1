#pragma once

// Geometric arcs of a polygon P and of a punctured polygon P*, packaged as
// arc systems whose tokens are shared with the combinatorial models: plain
// chords use the disk token "D a b" and punctured arcs use the token of their
// punctured-disk class.

#include <optional>
#include <variant>
#include <vector>

#include "flipforge/arc_system.hpp"
#include "flipforge/geometry.hpp"
#include "flipforge/topo.hpp"

namespace flipforge {

/// Straight segment between marked points; endpoint 0 is the puncture.
/// Stored with u < v.
struct GeomArc {
  int u = 1;
  int v = 3;

  static GeomArc of(int x, int y) { return x < y ? GeomArc{x, y} : GeomArc{y, x}; }
  bool is_radial() const { return u == 0; }
  bool operator==(const GeomArc&) const = default;
  auto operator<=>(const GeomArc&) const = default;
};

/// Chords of P, or chords and radials of P*, in token order.
std::vector<GeomArc> geom_arc_universe(const Polygon& poly);
std::vector<GeomArc> geom_arc_universe(const PuncturedPolygon& x);

/// The punctured-disk class of a member of the punctured universe. Throws
/// InputError when the chord passes through the puncture.
TopoArc classify_arc(const PuncturedPolygon& x, const GeomArc& g);

/// Inverse of classify_arc where defined.
std::optional<GeomArc> realizable(const PuncturedPolygon& x, const TopoArc& a);

class GeomSystem {
 public:
  static GeomSystem plain(const Polygon& poly);
  static GeomSystem punctured(const PuncturedPolygon& x);

  bool is_punctured() const { return puncture_.has_value(); }
  int n() const { return polygon_.size(); }
  const Polygon& polygon() const { return polygon_; }
  const Point2& puncture() const;
  const ArcSystem& system() const { return system_; }
  const std::vector<GeomArc>& arcs() const { return arcs_; }
  const GeomArc& arc(int k) const { return arcs_.at(k); }
  std::optional<int> index_of(const GeomArc& g) const;
  /// Endpoint 0 is the puncture.
  const Point2& point(int endpoint) const;

  /// Class of each arc of a punctured system.
  TopoArc topo(int k) const;
  TopoTriangulation to_topo(const ArcSet& t) const;
  /// Disk triangulation of a plain system.
  DiskTriangulation to_disk(const ArcSet& t) const;

  int puncture_degree(const ArcSet& t) const { return (t & system_.radials()).count(); }

 private:
  Polygon polygon_;
  std::optional<Point2> puncture_;
  std::vector<GeomArc> arcs_;
  std::vector<TopoArc> classes_;
  ArcSystem system_;
};

struct GeomFlip {
  ArcSet result;
  GeomArc removed;
  GeomArc inserted;
};

/// Exchanges the diagonals of the quadrilateral around `e`; nullopt when the
/// quadrilateral is not strictly convex or the other diagonal is not an arc.
std::optional<GeomFlip> geom_flip(const GeomSystem& sys, const ArcSet& t, const GeomArc& e);

struct Projection {
  ArcSet triangulation;
  bool completed = false;
};

/// Rubber-band projection of a punctured-disk triangulation onto the
/// geometric triangulations of `sys` (a punctured system).
Projection pi_project(const GeomSystem& sys, const TopoTriangulation& t);

/// Cones the puncture into its triangle, or into the quadrilateral around the
/// arc it lies on. `t` is a triangulation of `plain`.
ArcSet insert_puncture(const GeomSystem& plain, const GeomSystem& punctured, const ArcSet& t);

/// Every plain triangulation whose puncture insertion is `t`: one for
/// degree 3, one per quadrilateral diagonal through the puncture for degree 4.
std::vector<ArcSet> puncture_removals(const GeomSystem& plain, const GeomSystem& punctured, const ArcSet& t);

/// First of puncture_removals; nullopt unless the puncture has degree 3, or
/// degree 4 with the puncture on a diagonal of the surrounding quadrilateral.
std::optional<ArcSet> remove_puncture(const GeomSystem& plain, const GeomSystem& punctured,
                                      const ArcSet& t);

struct ScpPlacements {
  int corner = 1;
  /// Strictly inside the triangle on the corner and its two neighbours.
  std::vector<Point2> in_triangle;
  /// Strictly inside the overlap of the two boundary quadrilaterals but
  /// outside that triangle.
  std::vector<Point2> beyond_triangle;
};

/// Requires a convex polygon with n >= 5.
ScpPlacements scp_placements(const Polygon& poly, int corner);

}  // namespace flipforge
