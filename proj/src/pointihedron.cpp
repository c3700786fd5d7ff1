#include "flipforge/pointihedron.hpp"

#include <algorithm>
#include <map>

#include "flipforge/errors.hpp"

namespace flipforge {

namespace {

FlipPath cut_cycles(const FlipGraph& g, const std::vector<int>& walk) {
  FlipPath path;
  std::map<int, std::size_t> seen;
  for (int v : walk) {
    if (auto it = seen.find(v); it != seen.end()) {
      for (std::size_t k = it->second + 1; k < path.vertices.size(); ++k) seen.erase(path.vertices[k]);
      path.vertices.resize(it->second + 1);
      continue;
    }
    seen.emplace(v, path.vertices.size());
    path.vertices.push_back(v);
  }
  annotate(g, path);
  return path;
}

std::vector<int> by_label(const FlipGraph& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return g.labels[a] < g.labels[b]; });
  return ids;
}

}  // namespace

std::vector<int> Pointihedron::stratum_vertices(Stratum s) const {
  std::vector<int> out;
  for (int v = 0; v < graph().vertex_count(); ++v) {
    if (graph().strata[v] == s) out.push_back(v);
  }
  return out;
}

long Pointihedron::cross_edge_count() const {
  long count = 0;
  for (int u = 0; u < graph().vertex_count(); ++u) {
    for (int v : graph().adjacency[u]) {
      if (u < v && graph().strata[u] != graph().strata[v]) ++count;
    }
  }
  return count;
}

std::optional<int> Pointihedron::find(Stratum s, const ArcSet& arcs) const {
  auto it = closure.ids.find(PointKey{s, arcs});
  if (it == closure.ids.end()) return std::nullopt;
  return it->second;
}

const ArcSystem& Pointihedron::system(Stratum s) const {
  return s == Stratum::Punctured ? punctured.system() : plain.system();
}

Pointihedron build_pointihedron(const PuncturedPolygon& x) {
  if (!x.polygon.convex()) throw InputError("pointihedron needs a convex polygon");
  Pointihedron out{x, GeomSystem::plain(x.polygon), GeomSystem::punctured(x), {}};
  const GeomSystem& plain = out.plain;
  const GeomSystem& punct = out.punctured;
  auto neighbors = [&](const PointKey& k) {
    std::vector<PointKey> next;
    const ArcSystem& sys = k.stratum == Stratum::Plain ? plain.system() : punct.system();
    for (const Flip& f : sys.flips(k.arcs)) next.push_back({k.stratum, f.result});
    if (k.stratum == Stratum::Plain) {
      next.push_back({Stratum::Punctured, insert_puncture(plain, punct, k.arcs)});
    } else {
      for (const ArcSet& s : puncture_removals(plain, punct, k.arcs)) next.push_back({Stratum::Plain, s});
    }
    return next;
  };
  auto labeler = [&](const PointKey& k) {
    return k.stratum == Stratum::Plain ? plain.system().label(k.arcs) : punct.system().label(k.arcs);
  };
  PointKey seed{Stratum::Plain, plain.system().complete({})};
  out.closure = build_closure(seed, neighbors, labeler, [](const PointKey& k) { return k.stratum; });
  return out;
}

std::vector<ArcSet> fan_walk(const ArcSystem& sys, ArcSet t) {
  std::vector<ArcSet> walk{t};
  const ArcSet& radials = sys.radials();
  while ((t - radials).count() > 0) {
    std::optional<ArcSet> next;
    for (const Flip& f : sys.flips(t)) {
      if (!radials.test(f.removed) && radials.test(f.inserted)) {
        next = f.result;
        break;
      }
    }
    if (!next) throw ModelError("fan_walk: no flip adds a radial to " + sys.label(t));
    t = *next;
    walk.push_back(t);
  }
  return walk;
}

FlipPath route_via_fan(const Closure<ArcSet>& c, const ArcSystem& sys, int u, int v) {
  std::vector<int> walk;
  for (const ArcSet& s : fan_walk(sys, c.keys.at(u))) walk.push_back(c.ids.at(s));
  auto back = fan_walk(sys, c.keys.at(v));
  for (auto it = back.rbegin(); it != back.rend(); ++it) walk.push_back(c.ids.at(*it));
  return cut_cycles(c.graph, walk);
}

FlipPath route_via_fan(const Pointihedron& g, int u, int v) {
  auto leg = [&](int x) {
    std::vector<int> ids{x};
    PointKey k = g.closure.keys.at(x);
    if (k.stratum == Stratum::Plain) {
      k = {Stratum::Punctured, insert_puncture(g.plain, g.punctured, k.arcs)};
      ids.push_back(g.closure.ids.at(k));
    }
    auto walk = fan_walk(g.punctured.system(), k.arcs);
    for (std::size_t s = 1; s < walk.size(); ++s) ids.push_back(g.closure.ids.at({Stratum::Punctured, walk[s]}));
    return ids;
  };
  std::vector<int> walk = leg(u);
  auto back = leg(v);
  walk.insert(walk.end(), back.rbegin(), back.rend());
  return cut_cycles(g.graph(), walk);
}

std::vector<std::array<int, 3>> triangles(const GeomSystem& plain, const ArcSet& t) {
  const int n = plain.n();
  std::vector<std::vector<bool>> edge(n + 1, std::vector<bool>(n + 1, false));
  for (int k = 1; k <= n; ++k) edge[k][plain.polygon().next(k)] = edge[plain.polygon().next(k)][k] = true;
  t.for_each([&](int k) { edge[plain.arc(k).u][plain.arc(k).v] = edge[plain.arc(k).v][plain.arc(k).u] = true; });
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!edge[a][b]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (edge[a][c] && edge[b][c]) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<Point2> default_placements(const Polygon& poly) {
  Point2 centre = average(poly.vertices());
  std::vector<Point2> out{centre};
  GeomSystem plain = GeomSystem::plain(poly);
  for (const auto& tri : triangles(plain, plain.system().complete({}))) {
    Point2 c = average({poly.vertex(tri[0]), poly.vertex(tri[1]), poly.vertex(tri[2])});
    out.push_back(c);
    out.push_back(average({c, centre}));
  }
  return out;
}

std::optional<HeptagonWitness> heptagon_witness(const Polygon& poly, const std::vector<Point2>& placements,
                                                const std::function<void(const Pointihedron&)>& on_build) {
  for (const Point2& p : placements) {
    Pointihedron g = build_pointihedron(make_punctured(poly, p));
    if (on_build) on_build(g);
    std::vector<int> punct = g.stratum_vertices(Stratum::Punctured);
    Subgraph inner = induced_subgraph(g.graph(), punct);
    auto d_inner = distance_matrix(inner.graph);
    std::vector<int> local(g.graph().vertex_count(), -1);
    for (std::size_t k = 0; k < inner.parent.size(); ++k) local[inner.parent[k]] = static_cast<int>(k);
    std::vector<int> order = by_label(g.graph(), punct);
    for (std::size_t i = 0; i < order.size(); ++i) {
      DistanceRow row = bfs_distances(g.graph(), order[i]);
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        int u = order[i];
        int v = order[j];
        int di = d_inner[local[u]][local[v]];
        int dp = row.distances[v];
        if (di >= 7 && dp <= 6) {
          HeptagonWitness w{p, u, v, di, dp, shortest_path(g.graph(), u, v)};
          annotate(g.graph(), w.shortcut);
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

Thm62Instance thm62_instance(const Polygon& poly) {
  const int n = poly.size();
  if (!poly.convex()) throw InputError("thm62_instance needs a convex polygon");
  if (n < 4) throw InputError("thm62_instance needs n >= 4");
  GeomSystem plain = GeomSystem::plain(poly);
  auto closure = build_system_graph(plain.system());
  const FlipGraph& g = closure.graph;
  auto dist = distance_matrix(g);
  std::vector<int> order(g.vertex_count());
  for (int k = 0; k < g.vertex_count(); ++k) order[k] = k;
  order = by_label(g, order);
  std::vector<std::pair<int, int>> pairs;
  for (int a : order) {
    for (int b : order) pairs.emplace_back(a, b);
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const auto& x, const auto& y) { return dist[x.first][x.second] > dist[y.first][y.second]; });
  auto ring = [&](const std::array<int, 3>& t) {
    std::vector<Point2> r{poly.vertex(t[0]), poly.vertex(t[1]), poly.vertex(t[2])};
    return r;
  };
  for (const auto& [iu, iv] : pairs) {
    auto tu = triangles(plain, closure.keys[iu]);
    auto tv = triangles(plain, closure.keys[iv]);
    for (const auto& ear : tu) {
      int apex = 0;
      for (int x : ear) {
        if (std::count(ear.begin(), ear.end(), poly.prev(x)) && std::count(ear.begin(), ear.end(), poly.next(x))) {
          apex = x;
        }
      }
      if (apex == 0) continue;
      for (const auto& tri : tv) {
        int common = 0;
        int shared = 0;
        for (int x : tri) {
          if (std::count(ear.begin(), ear.end(), x)) {
            ++common;
            shared = x;
          }
        }
        if (common != 1) continue;
        auto overlap = intersect_convex(ring(ear), ring(tri));
        if (overlap.size() < 3 || sgn(twice_signed_area(overlap)) <= 0) continue;
        Thm62Instance out;
        out.placement = average(overlap);
        out.shared_vertex = shared;
        out.plain_u = closure.keys[iu];
        out.plain_v = closure.keys[iv];
        out.plain_distance = dist[iu][iv];
        GeomSystem punct = GeomSystem::punctured(make_punctured(poly, out.placement));
        out.lifted_u = insert_puncture(plain, punct, out.plain_u);
        out.lifted_v = insert_puncture(plain, punct, out.plain_v);
        return out;
      }
    }
  }
  throw ModelError("thm62_instance: no admissible pair for n = " + std::to_string(n));
}

}  // namespace flipforge
