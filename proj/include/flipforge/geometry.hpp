#pragma once

// Exact rational plane geometry over GMP rationals.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flipforge {

using Rational = mpq_class;

/// Accepts "p/q" or an integer string; the result is canonical.
Rational parse_rational(std::string_view text);
/// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point2(long px, long py) : x(px), y(py) {}

  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point2& o) const { return x != o.x ? x < o.x : y < o.y; }
};

std::string to_string(const Point2& p);

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

Orientation orientation(const Point2& p, const Point2& q, const Point2& r);

bool on_closed_segment(const Point2& p, const Point2& a, const Point2& b);
bool on_open_segment(const Point2& p, const Point2& a, const Point2& b);
/// True iff the open segments (a, b) and (c, d) share a point.
bool open_segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

Point2 average(const std::vector<Point2>& pts);
Rational twice_signed_area(const std::vector<Point2>& pts);
bool strictly_in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c);

/// Validated simple polygon; vertices counterclockwise, vertex 1 kept first.
class Polygon {
 public:
  int size() const { return static_cast<int>(vertices_.size()); }
  /// 1-based access.
  const Point2& vertex(int i) const { return vertices_.at(i - 1); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  bool convex() const { return reflex_.empty(); }
  /// 1-based indices of reflex vertices, ascending.
  const std::vector<int>& reflex() const { return reflex_; }
  /// True when input order was clockwise and got reversed.
  bool reoriented() const { return reoriented_; }

  int next(int i) const { return i % size() + 1; }
  int prev(int i) const { return (i + size() - 2) % size() + 1; }
  bool adjacent(int a, int b) const { return next(a) == b || next(b) == a; }

 private:
  friend Polygon validate_polygon(std::vector<Point2> points);
  std::vector<Point2> vertices_;
  std::vector<int> reflex_;
  bool reoriented_ = false;
};

/// Throws InputError naming offending input indices (1-based) for fewer than
/// three points, repeated points, collinear consecutive triples, or edges that
/// touch outside their shared endpoint.
Polygon validate_polygon(std::vector<Point2> points);

enum class Location { Inside, Boundary, Outside };

Location locate(const std::vector<Point2>& ring, const Point2& p);
Location locate(const Polygon& poly, const Point2& p);

/// True iff the open segment between vertices a and b lies in the open
/// interior. Throws InputError for equal or adjacent vertices.
bool segment_in_polygon(const Polygon& poly, int a, int b);

/// True iff the open segment from vertex v to interior point p lies in the
/// open interior and meets no vertex.
bool radial_in_polygon(const Polygon& poly, const Point2& p, int v);

struct PuncturedPolygon {
  Polygon polygon;
  Point2 puncture;
};

/// Throws InputError unless `p` is strictly interior.
PuncturedPolygon make_punctured(Polygon poly, Point2 p);

/// Convex polygon with rational vertices on the unit circle approximating the
/// regular n-gon (tangent half-angles rounded to 1/1000).
Polygon regular_polygon(int n);

/// Keeps the part of convex ring `ring` on the closed left side of line a->b.
std::vector<Point2> clip_left(const std::vector<Point2>& ring, const Point2& a, const Point2& b);
/// Intersection of two convex counterclockwise rings.
std::vector<Point2> intersect_convex(const std::vector<Point2>& a, const std::vector<Point2>& b);

}  // namespace flipforge
