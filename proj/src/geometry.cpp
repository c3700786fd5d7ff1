#include "flipforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flipforge/errors.hpp"

namespace flipforge {

namespace {

int sign(const Rational& r) { return sgn(r); }

bool closed_segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  if (on_closed_segment(a, c, d) || on_closed_segment(b, c, d) || on_closed_segment(c, a, b) ||
      on_closed_segment(d, a, b)) {
    return true;
  }
  int o1 = static_cast<int>(orientation(a, b, c));
  int o2 = static_cast<int>(orientation(a, b, d));
  int o3 = static_cast<int>(orientation(c, d, a));
  int o4 = static_cast<int>(orientation(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Open segment (A, B) lies in the open interior and contains no vertex.
bool open_segment_inside(const Polygon& poly, const Point2& a, const Point2& b, int skip_a, int skip_b) {
  const int n = poly.size();
  for (int k = 1; k <= n; ++k) {
    if (k == skip_a || k == skip_b) continue;
    if (on_closed_segment(poly.vertex(k), a, b)) return false;
  }
  for (int k = 1; k <= n; ++k) {
    if (open_segments_intersect(a, b, poly.vertex(k), poly.vertex(poly.next(k)))) return false;
  }
  Point2 mid((a.x + b.x) / 2, (a.y + b.y) / 2);
  return locate(poly, mid) == Location::Inside;
}

Point2 line_intersection(const Point2& p, const Point2& q, const Point2& a, const Point2& b) {
  // Point on segment pq hitting line ab; caller guarantees p and q straddle it.
  Rational d1 = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  Rational d2 = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
  Rational t = d1 / (d1 - d2);
  return Point2(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("invalid rational literal '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(k), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Orientation orientation(const Point2& p, const Point2& q, const Point2& r) {
  Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(sign(cross));
}

bool on_closed_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool on_open_segment(const Point2& p, const Point2& a, const Point2& b) {
  return !(p == a) && !(p == b) && on_closed_segment(p, a, b);
}

bool open_segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  int o1 = static_cast<int>(orientation(a, b, c));
  int o2 = static_cast<int>(orientation(a, b, d));
  if (o1 == 0 && o2 == 0) {
    bool use_x = a.x != b.x;
    Rational lo1 = use_x ? std::min(a.x, b.x) : std::min(a.y, b.y);
    Rational hi1 = use_x ? std::max(a.x, b.x) : std::max(a.y, b.y);
    Rational lo2 = use_x ? std::min(c.x, d.x) : std::min(c.y, d.y);
    Rational hi2 = use_x ? std::max(c.x, d.x) : std::max(c.y, d.y);
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }
  int o3 = static_cast<int>(orientation(c, d, a));
  int o4 = static_cast<int>(orientation(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Point2 average(const std::vector<Point2>& pts) {
  if (pts.empty()) throw InputError("average of no points");
  Rational sx = 0;
  Rational sy = 0;
  for (const auto& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  Rational k(static_cast<long>(pts.size()));
  return Point2(Rational(sx / k), Rational(sy / k));
}

Rational twice_signed_area(const std::vector<Point2>& pts) {
  Rational s = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Point2& p = pts[k];
    const Point2& q = pts[(k + 1) % pts.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

bool strictly_in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
  Orientation o = orientation(a, b, c);
  if (o == Orientation::Collinear) return false;
  return orientation(a, b, p) == o && orientation(b, c, p) == o && orientation(c, a, p) == o;
}

Polygon validate_polygon(std::vector<Point2> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw InputError("polygon needs at least 3 vertices, got " + std::to_string(n));
  auto at = [&](int i) -> const Point2& { return points[static_cast<std::size_t>((i % n + n) % n)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw InputError("vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " coincide");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (orientation(at(i - 1), at(i), at(i + 1)) == Orientation::Collinear) {
      throw InputError("vertices " + std::to_string((i + n - 1) % n + 1) + ", " + std::to_string(i + 1) +
                       ", " + std::to_string((i + 1) % n + 1) + " are collinear");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (closed_segments_intersect(at(i), at(i + 1), at(j), at(j + 1))) {
        throw InputError("edges " + std::to_string(i + 1) + "-" + std::to_string(i + 2) + " and " +
                         std::to_string(j + 1) + "-" + std::to_string((j + 1) % n + 1) + " intersect");
      }
    }
  }
  Polygon poly;
  if (sign(twice_signed_area(points)) < 0) {
    std::reverse(points.begin() + 1, points.end());
    poly.reoriented_ = true;
  }
  poly.vertices_ = std::move(points);
  for (int i = 1; i <= n; ++i) {
    if (orientation(poly.vertex(poly.prev(i)), poly.vertex(i), poly.vertex(poly.next(i))) == Orientation::CW) {
      poly.reflex_.push_back(i);
    }
  }
  return poly;
}

Location locate(const std::vector<Point2>& ring, const Point2& p) {
  const std::size_t n = ring.size();
  int winding = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Point2& a = ring[k];
    const Point2& b = ring[(k + 1) % n];
    if (on_closed_segment(p, a, b)) return Location::Boundary;
    if (a.y <= p.y) {
      if (b.y > p.y && orientation(a, b, p) == Orientation::CCW) ++winding;
    } else if (b.y <= p.y && orientation(a, b, p) == Orientation::CW) {
      --winding;
    }
  }
  return winding != 0 ? Location::Inside : Location::Outside;
}

Location locate(const Polygon& poly, const Point2& p) { return locate(poly.vertices(), p); }

bool segment_in_polygon(const Polygon& poly, int a, int b) {
  const int n = poly.size();
  if (a < 1 || a > n || b < 1 || b > n) throw InputError("vertex index out of range");
  if (a == b) throw InputError("segment endpoints must differ");
  if (poly.adjacent(a, b)) {
    throw InputError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                     " are adjacent; boundary edges are not interior arcs");
  }
  return open_segment_inside(poly, poly.vertex(a), poly.vertex(b), a, b);
}

bool radial_in_polygon(const Polygon& poly, const Point2& p, int v) {
  if (v < 1 || v > poly.size()) throw InputError("vertex index out of range");
  return open_segment_inside(poly, p, poly.vertex(v), v, v);
}

PuncturedPolygon make_punctured(Polygon poly, Point2 p) {
  Location loc = locate(poly, p);
  if (loc != Location::Inside) {
    throw InputError("puncture " + to_string(p) + " is not strictly interior to the polygon");
  }
  return PuncturedPolygon{std::move(poly), std::move(p)};
}

Polygon regular_polygon(int n) {
  if (n < 3) throw InputError("regular polygon needs n >= 3");
  std::vector<Point2> pts;
  for (int k = 0; k < n; ++k) {
    double theta = 2 * std::numbers::pi * k / n + std::numbers::pi / n - std::numbers::pi;
    Rational t(static_cast<long>(std::llround(std::tan(theta / 2) * 1000)), 1000L);
    t.canonicalize();
    Rational denom = 1 + t * t;
    pts.emplace_back(Rational((1 - t * t) / denom), Rational(2 * t / denom));
  }
  return validate_polygon(std::move(pts));
}

std::vector<Point2> clip_left(const std::vector<Point2>& ring, const Point2& a, const Point2& b) {
  std::vector<Point2> out;
  const std::size_t n = ring.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2& p = ring[k];
    const Point2& q = ring[(k + 1) % n];
    int sp = static_cast<int>(orientation(a, b, p));
    int sq = static_cast<int>(orientation(a, b, q));
    if (sp >= 0) out.push_back(p);
    if (sp * sq < 0) out.push_back(line_intersection(p, q, a, b));
  }
  std::vector<Point2> dedup;
  for (const auto& p : out) {
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

std::vector<Point2> intersect_convex(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  std::vector<Point2> out = a;
  for (std::size_t k = 0; k < b.size() && !out.empty(); ++k) {
    out = clip_left(out, b[k], b[(k + 1) % b.size()]);
  }
  return out;
}

}  // namespace flipforge
