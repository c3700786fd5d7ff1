#include "flipforge/geom_system.hpp"

#include <algorithm>
#include <map>

#include "flipforge/errors.hpp"

namespace flipforge {

namespace {

std::vector<Point2> sub_ring(const Polygon& poly, int from, int to) {
  std::vector<Point2> ring;
  for (int k = from;; k = poly.next(k)) {
    ring.push_back(poly.vertex(k));
    if (k == to) break;
  }
  return ring;
}

std::string describe(const GeomArc& g) {
  return g.is_radial() ? "radial to " + std::to_string(g.v)
                       : "chord {" + std::to_string(g.u) + "," + std::to_string(g.v) + "}";
}

}  // namespace

std::vector<GeomArc> geom_arc_universe(const Polygon& poly) {
  std::vector<GeomArc> out;
  for (int a = 1; a <= poly.size(); ++a) {
    for (int b = a + 1; b <= poly.size(); ++b) {
      if (!poly.adjacent(a, b) && segment_in_polygon(poly, a, b)) out.push_back({a, b});
    }
  }
  return out;
}

TopoArc classify_arc(const PuncturedPolygon& x, const GeomArc& g) {
  const Polygon& poly = x.polygon;
  if (g.is_radial()) return TopoArc::radial(g.v);
  switch (locate(sub_ring(poly, g.u, g.v), x.puncture)) {
    case Location::Inside:
      return TopoArc::cut(g.v, g.u);
    case Location::Outside:
      return TopoArc::cut(g.u, g.v);
    case Location::Boundary:
      break;
  }
  throw InputError("puncture lies on " + describe(g));
}

std::vector<GeomArc> geom_arc_universe(const PuncturedPolygon& x) {
  const Polygon& poly = x.polygon;
  std::vector<std::pair<TopoArc, GeomArc>> keyed;
  for (int v = 1; v <= poly.size(); ++v) {
    if (radial_in_polygon(poly, x.puncture, v)) keyed.emplace_back(TopoArc::radial(v), GeomArc{0, v});
  }
  for (const GeomArc& g : geom_arc_universe(poly)) {
    if (on_open_segment(x.puncture, poly.vertex(g.u), poly.vertex(g.v))) continue;
    keyed.emplace_back(classify_arc(x, g), g);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<GeomArc> out;
  for (const auto& [cls, g] : keyed) out.push_back(g);
  return out;
}

std::optional<GeomArc> realizable(const PuncturedPolygon& x, const TopoArc& a) {
  const Polygon& poly = x.polygon;
  const int n = poly.size();
  if (a.i < 1 || a.i > n || a.j < 1 || a.j > n) throw InputError("arc " + to_token(a) + " out of range");
  if (a.is_radial()) {
    if (radial_in_polygon(poly, x.puncture, a.i)) return GeomArc{0, a.i};
    return std::nullopt;
  }
  if (a.i == a.j || poly.adjacent(a.i, a.j)) return std::nullopt;
  GeomArc g = GeomArc::of(a.i, a.j);
  if (!segment_in_polygon(poly, g.u, g.v)) return std::nullopt;
  if (on_open_segment(x.puncture, poly.vertex(g.u), poly.vertex(g.v))) return std::nullopt;
  if (classify_arc(x, g) != a) return std::nullopt;
  return g;
}

const Point2& GeomSystem::puncture() const {
  if (!puncture_) throw InputError("plain polygon has no puncture");
  return *puncture_;
}

const Point2& GeomSystem::point(int endpoint) const {
  return endpoint == 0 ? puncture() : polygon_.vertex(endpoint);
}

std::optional<int> GeomSystem::index_of(const GeomArc& g) const {
  auto it = std::find(arcs_.begin(), arcs_.end(), g);
  if (it == arcs_.end()) return std::nullopt;
  return static_cast<int>(it - arcs_.begin());
}

GeomSystem GeomSystem::plain(const Polygon& poly) {
  GeomSystem s;
  s.polygon_ = poly;
  s.arcs_ = geom_arc_universe(poly);
  std::vector<std::string> tokens;
  std::vector<ArcSet> compat(s.arcs_.size());
  for (std::size_t a = 0; a < s.arcs_.size(); ++a) {
    tokens.push_back(to_token(Chord{s.arcs_[a].u, s.arcs_[a].v}));
    for (std::size_t b = 0; b < s.arcs_.size(); ++b) {
      if (a == b || !open_segments_intersect(s.point(s.arcs_[a].u), s.point(s.arcs_[a].v),
                                             s.point(s.arcs_[b].u), s.point(s.arcs_[b].v))) {
        compat[a].set(static_cast<int>(b));
      }
    }
  }
  s.system_ = ArcSystem(std::move(tokens), std::move(compat), poly.size() - 3);
  return s;
}

GeomSystem GeomSystem::punctured(const PuncturedPolygon& x) {
  GeomSystem s;
  s.polygon_ = x.polygon;
  s.puncture_ = x.puncture;
  s.arcs_ = geom_arc_universe(x);
  std::vector<std::string> tokens;
  std::vector<ArcSet> compat(s.arcs_.size());
  ArcSet radials;
  for (std::size_t a = 0; a < s.arcs_.size(); ++a) {
    s.classes_.push_back(classify_arc(x, s.arcs_[a]));
    tokens.push_back(to_token(s.classes_.back()));
    if (s.arcs_[a].is_radial()) radials.set(static_cast<int>(a));
    for (std::size_t b = 0; b < s.arcs_.size(); ++b) {
      if (a == b || !open_segments_intersect(s.point(s.arcs_[a].u), s.point(s.arcs_[a].v),
                                             s.point(s.arcs_[b].u), s.point(s.arcs_[b].v))) {
        compat[a].set(static_cast<int>(b));
      }
    }
  }
  s.system_ = ArcSystem(std::move(tokens), std::move(compat), x.polygon.size(), radials);
  return s;
}

TopoArc GeomSystem::topo(int k) const {
  if (!is_punctured()) throw InputError("plain systems have no punctured-disk classes");
  return classes_.at(k);
}

TopoTriangulation GeomSystem::to_topo(const ArcSet& t) const {
  std::vector<TopoArc> arcs;
  t.for_each([&](int k) { arcs.push_back(topo(k)); });
  return TopoTriangulation::from(n(), std::move(arcs));
}

DiskTriangulation GeomSystem::to_disk(const ArcSet& t) const {
  if (is_punctured()) throw InputError("punctured systems have no disk image");
  std::vector<Chord> chords;
  t.for_each([&](int k) { chords.push_back(Chord{arcs_[k].u, arcs_[k].v}); });
  return DiskTriangulation::from(n(), std::move(chords));
}

std::optional<GeomFlip> geom_flip(const GeomSystem& sys, const ArcSet& t, const GeomArc& e) {
  auto k = sys.index_of(e);
  if (!k || !t.test(*k)) throw InputError(describe(e) + " is not in the triangulation");
  auto partner = sys.system().flip_partner(t, *k);
  if (!partner) return std::nullopt;
  return GeomFlip{t.without(*k).with(*partner), e, sys.arc(*partner)};
}

Projection pi_project(const GeomSystem& sys, const TopoTriangulation& t) {
  if (!sys.is_punctured()) throw InputError("pi_project needs a punctured polygon");
  if (t.n != sys.n()) throw InputError("triangulation and polygon sizes differ");
  std::map<TopoArc, int> by_class;
  for (int k = 0; k < sys.system().size(); ++k) by_class.emplace(sys.topo(k), k);
  auto radial_index = [&](int v) -> std::optional<int> {
    auto it = by_class.find(TopoArc::radial(v));
    if (it == by_class.end()) return std::nullopt;
    return it->second;
  };
  ArcSet image;
  for (const TopoArc& a : t.arcs) {
    if (auto it = by_class.find(a); it != by_class.end()) {
      image.set(it->second);
    } else if (!a.is_radial()) {
      for (int v : {a.i, a.j}) {
        if (auto r = radial_index(v)) image.set(*r);
      }
    }
  }
  const ArcSystem& s = sys.system();
  if (!s.pairwise_compatible(image)) {
    throw ModelError("pi_project: image of " + t.label() + " has crossing segments: " + s.label(image));
  }
  if (s.is_triangulation(image)) return {image, false};
  ArcSet out = image;
  (s.radials() & s.completions(out)).for_each([&](int r) {
    if (s.completions(out).test(r)) out.set(r);
  });
  out = s.complete(out);
  return {out, true};
}

ArcSet insert_puncture(const GeomSystem& plain, const GeomSystem& punctured, const ArcSet& t) {
  if (plain.is_punctured() || !punctured.is_punctured()) throw InputError("insert_puncture: wrong systems");
  if (!plain.system().is_triangulation(t)) throw InputError("insert_puncture: not a triangulation");
  const int n = plain.n();
  const Point2& p = punctured.puncture();
  std::vector<std::vector<bool>> edge(n + 1, std::vector<bool>(n + 1, false));
  for (int k = 1; k <= n; ++k) edge[k][plain.polygon().next(k)] = edge[plain.polygon().next(k)][k] = true;
  t.for_each([&](int k) { edge[plain.arc(k).u][plain.arc(k).v] = edge[plain.arc(k).v][plain.arc(k).u] = true; });

  auto lift = [&](const ArcSet& chords) {
    ArcSet out;
    chords.for_each([&](int k) {
      auto j = punctured.index_of(plain.arc(k));
      if (!j) throw ModelError("insert_puncture: " + describe(plain.arc(k)) + " missing from punctured universe");
      out.set(*j);
    });
    return out;
  };
  auto add_radials = [&](ArcSet out, std::initializer_list<int> vs) {
    for (int v : vs) {
      auto j = punctured.index_of(GeomArc{0, v});
      if (!j) throw ModelError("insert_puncture: radial to " + std::to_string(v) + " is not an arc");
      out.set(*j);
    }
    if (!punctured.system().is_triangulation(out)) {
      throw ModelError("insert_puncture produced a non-triangulation: " + punctured.system().label(out));
    }
    return out;
  };

  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!edge[a][b]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (edge[a][c] && edge[b][c] &&
            strictly_in_triangle(p, plain.point(a), plain.point(b), plain.point(c))) {
          return add_radials(lift(t), {a, b, c});
        }
      }
    }
  }
  for (int k = 0; k < plain.system().size(); ++k) {
    if (!t.test(k)) continue;
    const GeomArc& g = plain.arc(k);
    if (!on_open_segment(p, plain.point(g.u), plain.point(g.v))) continue;
    std::vector<int> apex;
    for (int c = 1; c <= n; ++c) {
      if (c != g.u && c != g.v && edge[g.u][c] && edge[g.v][c]) apex.push_back(c);
    }
    if (apex.size() != 2) throw ModelError("insert_puncture: arc " + describe(g) + " is not interior");
    return add_radials(lift(t.without(k)), {g.u, g.v, apex[0], apex[1]});
  }
  throw ModelError("insert_puncture: puncture not located in " + plain.system().label(t));
}

std::vector<ArcSet> puncture_removals(const GeomSystem& plain, const GeomSystem& punctured, const ArcSet& t) {
  if (plain.is_punctured() || !punctured.is_punctured()) throw InputError("remove_puncture: wrong systems");
  if (!punctured.system().is_triangulation(t)) throw InputError("remove_puncture: not a triangulation");
  std::vector<int> ends;
  ArcSet chords;
  t.for_each([&](int k) {
    const GeomArc& g = punctured.arc(k);
    if (g.is_radial()) {
      ends.push_back(g.v);
    } else if (auto j = plain.index_of(g)) {
      chords.set(*j);
    } else {
      throw ModelError("remove_puncture: " + describe(g) + " missing from plain universe");
    }
  });
  std::sort(ends.begin(), ends.end());
  std::vector<ArcSet> out;
  if (ends.size() == 3) {
    out.push_back(chords);
  } else if (ends.size() == 4) {
    const Point2& p = punctured.puncture();
    for (auto [x, y] : {std::pair{ends[0], ends[2]}, std::pair{ends[1], ends[3]}}) {
      if (!on_open_segment(p, plain.point(x), plain.point(y))) continue;
      if (auto j = plain.index_of(GeomArc{x, y})) out.push_back(chords.with(*j));
    }
  }
  for (const ArcSet& s : out) {
    if (!plain.system().is_triangulation(s)) {
      throw ModelError("remove_puncture produced a non-triangulation: " + plain.system().label(s));
    }
  }
  return out;
}

std::optional<ArcSet> remove_puncture(const GeomSystem& plain, const GeomSystem& punctured, const ArcSet& t) {
  auto all = puncture_removals(plain, punctured, t);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ScpPlacements scp_placements(const Polygon& poly, int corner) {
  const int n = poly.size();
  if (!poly.convex()) throw InputError("scp_placements needs a convex polygon");
  if (n < 5) throw InputError("scp_placements needs n >= 5");
  if (corner < 1 || corner > n) throw InputError("corner index out of range");
  auto at = [&](int d) { return poly.vertex(((corner - 1 + d) % n + n) % n + 1); };
  std::vector<Point2> q_minus{at(-2), at(-1), at(0), at(1)};
  std::vector<Point2> q_plus{at(-1), at(0), at(1), at(2)};
  ScpPlacements out;
  out.corner = corner;
  out.in_triangle.push_back(average({at(-1), at(0), at(1)}));
  std::vector<Point2> overlap = intersect_convex(q_minus, q_plus);
  std::vector<Point2> beyond = clip_left(overlap, at(-1), at(1));
  if (beyond.size() >= 3 && sgn(twice_signed_area(beyond)) > 0) out.beyond_triangle.push_back(average(beyond));
  return out;
}

}  // namespace flipforge
