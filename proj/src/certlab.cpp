#include "flipforge/certlab.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

#include "flipforge/errors.hpp"
#include "flipforge/flipgraph.hpp"
#include "flipforge/pointihedron.hpp"

namespace flipforge {

namespace {

Json point_json(const Point2& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json polygon_json(const Polygon& poly) {
  Json out = Json::array();
  for (const auto& v : poly.vertices()) out.push_back(point_json(v));
  return out;
}

template <class Body>
CertReport timed(Body&& body) {
  auto start = std::chrono::steady_clock::now();
  CertReport r = body();
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

unsigned long binomial(int n, int k) {
  unsigned long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long>(n - k + i) / static_cast<unsigned long>(i);
  return r;
}

unsigned long catalan(int m) { return binomial(2 * m, m) / static_cast<unsigned long>(m + 1); }

void check_cap(int n, int cap, const std::string& what, unsigned long estimate) {
  if (n > cap) {
    throw CapExceeded(what + " with n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                      " (about " + std::to_string(estimate) + " triangulations); raise --cap or FLIPFORGE_CAP");
  }
}

Json labels(const FlipGraph& g, const std::vector<int>& ids) {
  Json out = Json::array();
  for (int v : ids) out.push_back(g.labels[v]);
  return out;
}

Json path_json(const FlipGraph& g, const std::vector<int>& ids) {
  Json out = Json::array();
  for (int v : ids) out.push_back({{"label", g.labels[v]}, {"stratum", to_string(g.strata[v])}});
  return out;
}

std::vector<int> ids_of(const FlipGraph& big, const FlipGraph& small) {
  std::vector<int> out;
  for (const auto& l : small.labels) {
    auto id = big.find(l);
    if (!id) throw ModelError("label '" + l + "' missing from the ambient graph");
    out.push_back(*id);
  }
  return out;
}

Json convexity_json(const FlipGraph& g, const ConvexityAudit& a) {
  Json out{{"strong", a.strong}, {"weak", a.weak}};
  if (a.strong_violation) {
    const auto& [u, v, w] = *a.strong_violation;
    out["strong_violation"] = {g.labels[u], g.labels[v], g.labels[w]};
  }
  if (a.weak_violation) out["weak_violation"] = {g.labels[a.weak_violation->first], g.labels[a.weak_violation->second]};
  return out;
}

// Geometric instances use the rational regular polygon.
Json regular_instance(int n) { return {{"n", n}, {"polygon", "regular"}}; }

}  // namespace

Json CertReport::to_json(bool with_duration) const {
  Json out{{"claim", claim},       {"instance", instance}, {"computed", computed}, {"expected", expected},
           {"pass", pass},         {"evidence", evidence}, {"witness", witness}};
  if (with_duration) out["duration_ms"] = duration_ms;
  return out;
}

std::string CertReport::table_row() const {
  std::ostringstream os;
  os << (evidence ? "NOTE" : (pass ? "PASS" : "FAIL")) << "  " << claim << "  " << instance.dump() << "  "
     << expected;
  return os.str();
}

CertConfig default_config() {
  CertConfig cfg;
  if (const char* env = std::getenv("FLIPFORGE_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap < 1) throw std::invalid_argument("non-positive");
      cfg.topo_cap = cfg.geom_cap = cap;
    } catch (const std::exception&) {
      throw InputError(std::string("FLIPFORGE_CAP must be a positive integer, got '") + env + "'");
    }
  }
  return cfg;
}

std::vector<Point2> sample_placements(const Polygon& poly, int extra, unsigned seed) {
  Point2 c = average(poly.vertices());
  auto toward = [&](const Point2& from, Rational t) {
    return Point2(Rational(from.x + t * (c.x - from.x)), Rational(from.y + t * (c.y - from.y)));
  };
  std::vector<Point2> out{c, toward(poly.vertex(1), Rational(1, 23)),
                          toward(average({poly.vertex(1), poly.vertex(2)}), Rational(1, 19))};
  std::mt19937 rng(seed);
  for (int k = 0; k < extra; ++k) {
    Rational sx = 0, sy = 0, total = 0;
    for (const auto& v : poly.vertices()) {
      Rational w(static_cast<long>(rng() % 97 + 1));
      sx += w * v.x;
      sy += w * v.y;
      total += w;
    }
    out.emplace_back(Rational(sx / total), Rational(sy / total));
  }
  return out;
}

std::vector<Polygon> one_reflex_battery(int n) {
  if (n < 4) throw InputError("one-reflex polygons need n >= 4");
  Polygon base = regular_polygon(n);
  Point2 mid = average({base.vertex(n - 1), base.vertex(1)});
  // The square's chord midpoint is near its centre, so aim at vertex 2 instead.
  Point2 c = n == 4 ? base.vertex(2) : average(base.vertices());
  std::vector<Polygon> out;
  for (Rational depth : {Rational(1, 3), Rational(2, 3)}) {
    std::vector<Point2> pts(base.vertices().begin(), base.vertices().end() - 1);
    pts.emplace_back(Rational(mid.x + depth * (c.x - mid.x)), Rational(mid.y + depth * (c.y - mid.y)));
    out.push_back(validate_polygon(pts));
  }
  return out;
}

CertReport verify_diam_tn(int n, const CertConfig& cfg) {
  return timed([&] {
    if (n < 1) throw InputError("n must be >= 1");
    check_cap(n, cfg.topo_cap, "T_n", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "thm-diam-Tn";
    r.instance = {{"n", n}};
    ArcSystem sys = punctured_disk_system(n);
    auto c = build_system_graph(sys, encode(sys, fan(n)));
    Diameter d = diameter(c.graph, cfg.jobs);
    ZigzagPair z = zigzag_pair(n);
    r.computed = {{"vertices", c.graph.vertex_count()}, {"edges", c.graph.edge_count()}, {"diameter", d.value},
                  {"zigzag_distance", z.distance}};
    r.expected = "diameter = 2n-2 = " + std::to_string(2 * n - 2) + " and the zigzag pair attains it";
    r.pass = d.value == 2 * n - 2 && z.distance == 2 * n - 2;
    if (!r.pass) r.witness = {{"diametral_pair", {c.graph.labels[d.u], c.graph.labels[d.v]}}};
    return r;
  });
}

CertReport verify_zigzag(int n, const CertConfig& cfg) {
  return timed([&] {
    if (n < 1) throw InputError("n must be >= 1");
    check_cap(n, cfg.topo_cap, "T_n", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "lemma-zigzag";
    r.instance = {{"n", n}};
    ArcSystem sys = punctured_disk_system(n);
    auto c = build_system_graph(sys, encode(sys, fan(n)));
    ZigzagPair z = zigzag_pair(n);
    int u = c.ids.at(encode(sys, z.minus));
    int v = c.ids.at(encode(sys, z.plus));
    FlipPath path = shortest_path(c.graph, u, v);
    annotate(c.graph, path);
    r.computed = {{"minus", z.minus.label()},
                  {"plus", z.plus.label()},
                  {"rotation", z.plus_from_minus.rotation},
                  {"reflect", z.plus_from_minus.reflect},
                  {"distance", path.length()},
                  {"geodesic", labels(c.graph, path.vertices)}};
    r.expected = "d(A-, A+) = 2n-2 = " + std::to_string(2 * n - 2);
    r.pass = path.length() == 2 * n - 2 && z.distance == path.length() &&
             dihedral_action(z.plus_from_minus, z.minus) == z.plus;
    if (!r.pass) r.witness = r.computed["geodesic"];
    return r;
  });
}

namespace {

CertReport oracle_report(const std::string& claim, int n, const ArcSystem& sys) {
  CertReport r;
  r.claim = claim;
  r.instance = {{"n", n}};
  auto c = build_system_graph(sys);
  std::vector<ArcSet> closure = c.keys;
  std::sort(closure.begin(), closure.end());
  r.expected = "closure = maximal-set enumeration, every set of size " + std::to_string(sys.triangulation_size());
  try {
    std::vector<ArcSet> oracle = enumerate_maximal(sys);
    r.computed = {{"closure", closure.size()}, {"oracle", oracle.size()}, {"set_size", sys.triangulation_size()}};
    r.pass = closure == oracle;
    if (!r.pass) {
      for (const auto& s : oracle) {
        if (!std::binary_search(closure.begin(), closure.end(), s)) {
          r.witness = {{"missing_from_closure", sys.label(s)}};
          break;
        }
      }
    }
  } catch (const ModelError& e) {
    r.pass = false;
    r.witness = {{"error", e.what()}};
  }
  return r;
}

}  // namespace

CertReport verify_oracle_tn(int n, const CertConfig& cfg) {
  return timed([&] {
    check_cap(n, cfg.topo_cap, "T_n", binomial(2 * n - 1, n));
    return oracle_report("oracle-Tn", n, punctured_disk_system(n));
  });
}

CertReport verify_oracle_an(int n, const CertConfig& cfg) {
  return timed([&] {
    check_cap(n, cfg.assoc_cap, "A_n", catalan(n - 2));
    return oracle_report("oracle-An", n, disk_system(n));
  });
}

CertReport verify_assoc(int n, const CertConfig& cfg) {
  return timed([&] {
    if (n < 3) throw InputError("A_n needs n >= 3");
    check_cap(n, cfg.assoc_cap, "A_n", catalan(n - 2));
    CertReport r;
    r.claim = "assoc-cross-check";
    r.instance = {{"n", n}};
    auto c = build_system_graph(disk_system(n));
    Diameter d = diameter(c.graph, cfg.jobs);
    r.computed = {{"vertices", c.graph.vertex_count()}, {"edges", c.graph.edge_count()}, {"diameter", d.value},
                  {"catalan", catalan(n - 2)}};
    r.expected = "|A_n| = Catalan(n-2) = " + std::to_string(catalan(n - 2));
    r.pass = static_cast<unsigned long>(c.graph.vertex_count()) == catalan(n - 2);
    return r;
  });
}

CertReport verify_embedding_fpstar(int n, const std::vector<Point2>& placements, const CertConfig& cfg) {
  return timed([&] {
    check_cap(n, std::min(cfg.geom_cap, cfg.topo_cap), "F(P*) in T_n", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "thm-fpstar-strongly-convex";
    r.instance = regular_instance(n);
    r.expected = "F(P*) induced and strongly convex in T_n; geodesics of F(P*) keep shared arcs";
    Polygon poly = regular_polygon(n);
    ArcSystem topo = punctured_disk_system(n);
    auto tn = build_system_graph(topo);
    Json rows = Json::array();
    for (const Point2& p : placements) {
      GeomSystem sys = GeomSystem::punctured(make_punctured(poly, p));
      auto fp = build_system_graph(sys.system());
      std::vector<int> ids = ids_of(tn.graph, fp.graph);
      bool induced = induced_subgraph(tn.graph, ids).graph.edge_count() == fp.graph.edge_count();
      ConvexityAudit audit = is_strongly_convex(tn.graph, ids);
      auto dist = distance_matrix(fp.graph, cfg.jobs);
      long pairs = 0;
      Json cor_violation = nullptr;
      const int m = fp.graph.vertex_count();
      for (int u = 0; u < m && cor_violation.is_null(); ++u) {
        for (int v = u + 1; v < m && cor_violation.is_null(); ++v) {
          ArcSet shared = fp.keys[u] & fp.keys[v];
          if (shared.empty()) continue;
          ++pairs;
          for (int w = 0; w < m; ++w) {
            if (dist[u][w] + dist[w][v] == dist[u][v] && !shared.subset_of(fp.keys[w])) {
              cor_violation = {fp.graph.labels[u], fp.graph.labels[v], fp.graph.labels[w]};
              break;
            }
          }
        }
      }
      Json row{{"placement", point_json(p)},
               {"vertices", m},
               {"induced", induced},
               {"convexity", convexity_json(tn.graph, audit)},
               {"shared_arc_pairs", pairs},
               {"shared_arc_preserved", cor_violation.is_null()}};
      bool ok = induced && audit.strong && cor_violation.is_null();
      if (!ok && r.witness.is_null()) {
        r.witness = {{"placement", point_json(p)}, {"convexity", row["convexity"]}, {"shared_arc", cor_violation}};
      }
      r.pass = r.pass && ok;
      rows.push_back(row);
    }
    r.computed = {{"placements", rows}, {"tn_vertices", tn.graph.vertex_count()}};
    return r;
  });
}

CertReport verify_crossing(int n, const std::vector<Point2>& placements, const CertConfig& cfg) {
  return timed([&] {
    check_cap(n, cfg.geom_cap, "punctured polygon", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "crossing-consistency";
    r.instance = regular_instance(n);
    r.expected = "open segments cross iff their arc classes are incompatible";
    Polygon poly = regular_polygon(n);
    Json rows = Json::array();
    for (const Point2& p : placements) {
      auto x = make_punctured(poly, p);
      auto arcs = geom_arc_universe(x);
      long pairs = 0;
      long mismatches = 0;
      for (std::size_t a = 0; a < arcs.size(); ++a) {
        for (std::size_t b = a + 1; b < arcs.size(); ++b) {
          ++pairs;
          auto pt = [&](int e) { return e == 0 ? p : poly.vertex(e); };
          bool cross = open_segments_intersect(pt(arcs[a].u), pt(arcs[a].v), pt(arcs[b].u), pt(arcs[b].v));
          TopoArc ta = classify_arc(x, arcs[a]);
          TopoArc tb = classify_arc(x, arcs[b]);
          if (cross == compatible(ta, tb, n)) {
            ++mismatches;
            if (r.witness.is_null()) {
              r.witness = {{"placement", point_json(p)}, {"arcs", {to_token(ta), to_token(tb)}}, {"cross", cross}};
            }
          }
        }
      }
      rows.push_back({{"placement", point_json(p)}, {"arcs", arcs.size()}, {"pairs", pairs}, {"mismatches", mismatches}});
      r.pass = r.pass && mismatches == 0;
    }
    r.computed = {{"placements", rows}};
    return r;
  });
}

CertReport verify_projection(int n, const std::vector<Point2>& placements, const CertConfig& cfg) {
  return timed([&] {
    check_cap(n, std::min(cfg.geom_cap, cfg.topo_cap), "T_n", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "projection-pi";
    r.instance = regular_instance(n);
    r.expected = "pi is the identity on F(P*) and sends flip-neighbours to equal or adjacent triangulations";
    Polygon poly = regular_polygon(n);
    ArcSystem topo = punctured_disk_system(n);
    auto tn = build_system_graph(topo);
    Json rows = Json::array();
    for (const Point2& p : placements) {
      GeomSystem sys = GeomSystem::punctured(make_punctured(poly, p));
      auto fp = build_system_graph(sys.system());
      auto dist = distance_matrix(fp.graph, cfg.jobs);
      long identity_failures = 0;
      for (const ArcSet& t : fp.keys) {
        Projection pr = pi_project(sys, sys.to_topo(t));
        if (pr.completed || !(pr.triangulation == t)) ++identity_failures;
      }
      std::vector<Projection> image;
      long completed = 0;
      for (const ArcSet& key : tn.keys) {
        image.push_back(pi_project(sys, decode_topo(topo, key, n)));
        completed += image.back().completed ? 1 : 0;
      }
      long edges = 0;
      long stretched = 0;
      int worst = 0;
      Json first_bad = nullptr;
      for (int u = 0; u < tn.graph.vertex_count(); ++u) {
        for (int v : tn.graph.adjacency[u]) {
          if (v < u) continue;
          ++edges;
          int d = dist[fp.ids.at(image[u].triangulation)][fp.ids.at(image[v].triangulation)];
          worst = std::max(worst, d);
          if (d > 1) {
            ++stretched;
            if (first_bad.is_null()) {
              first_bad = {{"from", tn.graph.labels[u]},
                           {"to", tn.graph.labels[v]},
                           {"images", {sys.system().label(image[u].triangulation),
                                       sys.system().label(image[v].triangulation)}},
                           {"image_distance", d}};
            }
          }
        }
      }
      rows.push_back({{"placement", point_json(p)},
                      {"fpstar_vertices", fp.graph.vertex_count()},
                      {"identity_failures", identity_failures},
                      {"completed_images", completed},
                      {"tn_edges", edges},
                      {"stretched_edges", stretched},
                      {"max_image_distance", worst}});
      bool ok = identity_failures == 0 && stretched == 0;
      if (!ok && r.witness.is_null()) r.witness = {{"placement", point_json(p)}, {"edge", first_bad}};
      r.pass = r.pass && ok;
    }
    r.computed = {{"placements", rows}, {"tn_vertices", tn.graph.vertex_count()}};
    return r;
  });
}

CertReport verify_scp(int n, int corner, const CertConfig& cfg) {
  return timed([&] {
    if (n < 5) throw InputError("scp needs n >= 5");
    check_cap(n, cfg.geom_cap, "pointihedron", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "thm-scp";
    r.instance = regular_instance(n);
    r.instance["corner"] = corner;
    r.expected = "plain stratum strongly convex for placements inside both boundary quadrilaterals";
    Polygon poly = regular_polygon(n);
    ScpPlacements pl = scp_placements(poly, corner);
    auto audit_at = [&](const Point2& p) {
      Pointihedron g = build_pointihedron(make_punctured(poly, p));
      ConvexityAudit a = is_strongly_convex(g.graph(), g.stratum_vertices(Stratum::Plain));
      return std::pair{a, convexity_json(g.graph(), a)};
    };
    Json asserted = Json::array();
    auto run = [&](const std::vector<Point2>& pts, const char* kind) {
      if (pts.empty()) {
        r.pass = false;
        r.witness = {{"missing_placement", kind}};
      }
      for (const auto& p : pts) {
        auto [a, js] = audit_at(p);
        asserted.push_back({{"kind", kind}, {"placement", point_json(p)}, {"convexity", js}});
        if (!a.strong) {
          r.pass = false;
          if (r.witness.is_null()) r.witness = asserted.back();
        }
      }
    };
    run(pl.in_triangle, "in-triangle");
    run(pl.beyond_triangle, "beyond-triangle");
    auto at = [&](int d) { return poly.vertex(((corner - 1 + d) % n + n) % n + 1); };
    std::vector<Point2> overlap =
        intersect_convex({at(-2), at(-1), at(0), at(1)}, {at(-1), at(0), at(1), at(2)});
    Json probes = Json::array();
    Point2 c = average(poly.vertices());
    std::vector<Point2> candidates;
    for (int j = 1; j <= n; ++j) {
      const Point2& v = poly.vertex(j);
      candidates.emplace_back(Rational(v.x + (c.x - v.x) / 7), Rational(v.y + (c.y - v.y) / 7));
    }
    for (int j = 1; j <= n; ++j) {
      Point2 m = average({poly.vertex(j), poly.vertex(poly.next(j))});
      candidates.emplace_back(Rational(m.x + (c.x - m.x) / 7), Rational(m.y + (c.y - m.y) / 7));
    }
    for (const Point2& p : default_placements(poly)) candidates.push_back(p);
    for (const Point2& p : candidates) {
      if (probes.size() >= 3) break;
      if (locate(overlap, p) != Location::Outside) continue;
      auto [a, js] = audit_at(p);
      probes.push_back({{"placement", point_json(p)}, {"convexity", js}});
    }
    r.computed = {{"asserted", asserted}, {"evidence_probes", probes}};
    return r;
  });
}

CertReport verify_bounds_fpstar(const Polygon& poly, const Point2& placement, const CertConfig& cfg) {
  return timed([&] {
    const int n = poly.size();
    check_cap(n, cfg.geom_cap, "pointihedron", binomial(2 * n - 1, n));
    if (!poly.convex()) throw InputError("bounds verification needs a convex polygon");
    CertReport r;
    r.claim = "bounds-fpstar";
    r.instance = {{"n", n}, {"polygon", polygon_json(poly)}, {"placement", point_json(placement)}};
    r.expected = "diam F(P*) <= 2n-6, diam Fbar <= diam(A_n)+3, puncture degree >= 3, fan routes <= 2n-6";
    Pointihedron g = build_pointihedron(make_punctured(poly, placement));
    std::vector<int> plain_ids = g.stratum_vertices(Stratum::Plain);
    std::vector<int> punct_ids = g.stratum_vertices(Stratum::Punctured);
    Subgraph fp = induced_subgraph(g.graph(), punct_ids);
    Subgraph fplain = induced_subgraph(g.graph(), plain_ids);
    auto an = build_system_graph(disk_system(std::max(n, 3)));
    int d_fp = diameter(fp.graph, cfg.jobs).value;
    int d_bar = diameter(g.graph(), cfg.jobs).value;
    int d_an = diameter(an.graph, cfg.jobs).value;

    int min_degree = n;
    int longest_fan_walk = 0;
    for (int v : punct_ids) {
      const ArcSet& t = g.closure.keys[v].arcs;
      min_degree = std::min(min_degree, g.punctured.puncture_degree(t));
      longest_fan_walk = std::max(longest_fan_walk, static_cast<int>(fan_walk(g.punctured.system(), t).size()) - 1);
    }
    bool plain_is_an = fplain.graph.vertex_count() == an.graph.vertex_count() &&
                       fplain.graph.edge_count() == an.graph.edge_count();
    for (const auto& l : fplain.graph.labels) plain_is_an = plain_is_an && an.graph.find(l).has_value();
    bool one_cross_edge = true;
    for (int v : plain_ids) {
      int cross = 0;
      for (int w : g.graph().adjacency[v]) cross += g.graph().strata[w] == Stratum::Punctured ? 1 : 0;
      one_cross_edge = one_cross_edge && cross == 1;
    }

    Json split = nullptr;
    if (n >= 4) {
      int a = 1;
      int b = 1 + n / 2;
      auto fixed = fixed_arc_subgraph(fp.graph, {"R " + std::to_string(a), "R " + std::to_string(b)});
      if (!fixed.empty()) {
        Subgraph sub = induced_subgraph(fp.graph, fixed);
        Json parts = Json::array();
        int d_sub = diameter(sub.graph, cfg.jobs).value;
        bool chain = true;
        for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
          std::vector<Point2> pts;
          for (int k = from;; k = poly.next(k)) {
            pts.push_back(poly.vertex(k));
            if (k == to) break;
          }
          pts.push_back(placement);
          try {
            Polygon part = validate_polygon(pts);
            auto pg = build_system_graph(GeomSystem::plain(part).system());
            int dp = diameter(pg.graph, cfg.jobs).value;
            parts.push_back({{"vertices", part.size()}, {"diameter", dp}});
            chain = chain && dp <= d_sub;
          } catch (const InputError& e) {
            parts.push_back({{"degenerate", e.what()}});
          }
        }
        split = {{"arcs", {"R " + std::to_string(a), "R " + std::to_string(b)}},
                 {"subgraph_vertices", sub.graph.vertex_count()},
                 {"subgraph_diameter", d_sub},
                 {"parts", parts},
                 {"parts_within_subgraph_diameter", chain}};
      }
    }

    r.computed = {{"plain_vertices", plain_ids.size()},
                  {"punctured_vertices", punct_ids.size()},
                  {"cross_edges", g.cross_edge_count()},
                  {"diam_fpstar", d_fp},
                  {"diam_pointihedron", d_bar},
                  {"diam_an", d_an},
                  {"min_puncture_degree", min_degree},
                  {"longest_fan_walk", longest_fan_walk},
                  {"plain_stratum_is_an", plain_is_an},
                  {"one_cross_edge_per_plain_vertex", one_cross_edge},
                  {"fpstar_at_least_2n_minus_12", d_fp >= 2 * n - 12},
                  {"fpstar_at_least_2n_minus_8", d_fp >= 2 * n - 8},
                  {"pointihedron_at_least_2n_minus_8", d_bar >= 2 * n - 8},
                  {"split_demo", split}};
    r.pass = d_fp <= 2 * n - 6 && d_bar <= d_an + 3 && (n < 3 || min_degree >= 3) && longest_fan_walk <= n - 3 &&
             plain_is_an && one_cross_edge;
    if (!r.pass) r.witness = r.computed;
    return r;
  });
}

CertReport verify_nonconvex(const Polygon& poly, const CertConfig& cfg) {
  return timed([&] {
    const int n = poly.size();
    if (poly.convex()) throw InputError("verify_nonconvex needs a polygon with a reflex vertex");
    check_cap(n, cfg.geom_cap + 1, "non-convex polygon", catalan(n - 2));
    CertReport r;
    r.claim = "nonconvex-fp";
    r.instance = {{"n", n}, {"polygon", polygon_json(poly)}, {"reflex", poly.reflex()}};
    r.expected = "F(P) connected and induced in A_n; single-chord fixed-arc subgraphs of A_n strongly convex";
    GeomSystem sys = GeomSystem::plain(poly);
    auto fp = build_system_graph(sys.system());
    auto oracle = enumerate_maximal(sys.system());
    bool connected = static_cast<std::size_t>(fp.graph.vertex_count()) == oracle.size();
    auto an = build_system_graph(disk_system(n));
    std::vector<int> ids = ids_of(an.graph, fp.graph);
    bool induced = induced_subgraph(an.graph, ids).graph.edge_count() == fp.graph.edge_count();
    int d = diameter(fp.graph, cfg.jobs).value;
    Json fixed = Json::array();
    bool fixed_ok = true;
    if (n <= 8) {
      for (const Chord& c : disk_universe(n)) {
        auto sub = fixed_arc_subgraph(an.graph, {to_token(c)});
        ConvexityAudit a = is_strongly_convex(an.graph, sub);
        fixed_ok = fixed_ok && a.strong;
        if (!a.strong && r.witness.is_null()) r.witness = {{"chord", to_token(c)}, {"convexity", convexity_json(an.graph, a)}};
      }
    }
    r.computed = {{"vertices", fp.graph.vertex_count()},
                  {"oracle", oracle.size()},
                  {"an_vertices", an.graph.vertex_count()},
                  {"connected", connected},
                  {"induced", induced},
                  {"diameter", d},
                  {"at_least_2n_minus_10", d >= 2 * n - 10},
                  {"excluded_chords", static_cast<int>(disk_universe(n).size()) - sys.system().size()},
                  {"fixed_arc_audited", n <= 8},
                  {"fixed_arc_strong", fixed_ok}};
    r.pass = connected && induced && fixed_ok;
    if (!r.pass && r.witness.is_null()) r.witness = r.computed;
    return r;
  });
}

CertReport verify_heptagon(const std::vector<Point2>& placements, const CertConfig& cfg) {
  return timed([&] {
    check_cap(7, cfg.geom_cap, "pointihedron", binomial(13, 7));
    CertReport r;
    r.claim = "thm-heptagon-not-convex";
    r.instance = regular_instance(7);
    r.expected = "some punctured pair has d_Fbar <= 6 < 7 <= d_F(P*); punctured stratum neither strongly nor weakly convex";
    Polygon poly = regular_polygon(7);
    std::vector<Point2> pts = placements.empty() ? default_placements(poly) : placements;
    r.instance["placements_offered"] = pts.size();
    auto w = heptagon_witness(poly, pts);
    if (!w) {
      r.pass = false;
      r.witness = {{"error", "no witness for any offered placement"}};
      return r;
    }
    Pointihedron g = build_pointihedron(make_punctured(poly, w->placement));
    std::vector<int> punct = g.stratum_vertices(Stratum::Punctured);
    ConvexityAudit a = is_strongly_convex(g.graph(), punct);
    bool leaves = false;
    for (int v : w->shortcut.vertices) leaves = leaves || g.graph().strata[v] == Stratum::Plain;
    r.computed = {{"placement", point_json(w->placement)},
                  {"u", g.graph().labels[w->u]},
                  {"v", g.graph().labels[w->v]},
                  {"d_intrinsic", w->d_intrinsic},
                  {"d_pointihedron", w->d_pointihedron},
                  {"shortcut", path_json(g.graph(), w->shortcut.vertices)},
                  {"shortcut_leaves_stratum", leaves},
                  {"pair_weakly_convex", w->d_intrinsic == w->d_pointihedron},
                  {"convexity", convexity_json(g.graph(), a)}};
    r.pass = w->d_pointihedron <= 6 && w->d_intrinsic >= 7 && leaves && !a.strong && !a.weak;
    if (!r.pass) r.witness = r.computed;
    return r;
  });
}

namespace {

struct WalkAudit {
  GeodesicStepCount steps;
  bool walk_ok = true;
  Json bad_step = nullptr;
};

// `same` and `adjacent` compare images of two graph vertices.
WalkAudit audit_projection(const FlipGraph& g, int u, int v, const std::function<bool(int, int)>& same,
                           const std::function<bool(int, int)>& adjacent) {
  WalkAudit out;
  out.steps = count_marked_steps(g, u, v, same);
  DistanceRow from_u = bfs_distances(g, u);
  DistanceRow to_v = bfs_distances(g, v);
  const int d = from_u.distances[v];
  for (int x = 0; x < g.vertex_count() && out.walk_ok; ++x) {
    if (from_u.distances[x] + to_v.distances[x] != d) continue;
    for (int y : g.adjacency[x]) {
      if (from_u.distances[y] != from_u.distances[x] + 1 || to_v.distances[y] != to_v.distances[x] - 1) continue;
      if (!same(x, y) && !adjacent(x, y)) {
        out.walk_ok = false;
        out.bad_step = {g.labels[x], g.labels[y]};
        break;
      }
    }
  }
  return out;
}

}  // namespace

CertReport verify_deletion_calculus(int n, const CertConfig& cfg) {
  return timed([&] {
    if (n < 1) throw InputError("n must be >= 1");
    check_cap(n + 1, cfg.topo_cap, "T_n", binomial(2 * n + 1, n + 1));
    CertReport r;
    r.claim = "lemma-deletion-calculus";
    r.instance = {{"n", n}, {"source_n", n + 1}};
    r.expected = "every geodesic between the reflected zigzag pair loses l >= 2 steps and projects to a walk";
    const int big = n + 1;
    ArcSystem sys = punctured_disk_system(big);
    auto c = build_system_graph(sys);
    ZigzagPair z = zigzag_pair(big);
    Dihedral rho = reflection_fixing_first(big);
    int u = c.ids.at(encode(sys, dihedral_action(rho, z.minus)));
    int v = c.ids.at(encode(sys, dihedral_action(rho, z.plus)));
    std::vector<std::optional<TopoTriangulation>> image(c.keys.size());
    auto img = [&](int x) -> const TopoTriangulation& {
      if (!image[x]) image[x] = delete_vertex(decode_topo(sys, c.keys[x], big));
      return *image[x];
    };
    auto same = [&](int x, int y) { return img(x) == img(y); };
    auto adjacent = [&](int x, int y) {
      std::vector<TopoArc> diff;
      std::set_difference(img(x).arcs.begin(), img(x).arcs.end(), img(y).arcs.begin(), img(y).arcs.end(),
                          std::back_inserter(diff));
      return diff.size() == 1 && img(x).arcs.size() == img(y).arcs.size();
    };
    WalkAudit a = audit_projection(c.graph, u, v, same, adjacent);
    ArcSystem small = punctured_disk_system(n);
    auto sc = build_system_graph(small);
    int d_small = bfs_distances(sc.graph, sc.ids.at(encode(small, img(u)))).distances[sc.ids.at(encode(small, img(v)))];
    bool ends_ok = img(u) == zigzag_minus(n);
    r.computed = {{"k", a.steps.distance},
                  {"l_min", a.steps.min_marked},
                  {"l_max", a.steps.max_marked},
                  {"projected_distance", d_small},
                  {"image_of_minus_is_zigzag", ends_ok},
                  {"walks_valid", a.walk_ok},
                  {"geodesic_min_l", labels(c.graph, a.steps.witness)}};
    r.pass = a.walk_ok && ends_ok && a.steps.min_marked >= 2 && a.steps.distance - a.steps.max_marked >= d_small;
    if (!r.pass) r.witness = {{"bad_step", a.bad_step}, {"geodesic", r.computed["geodesic_min_l"]}};
    return r;
  });
}

CertReport verify_contraction_calculus(int n, const CertConfig& cfg) {
  return timed([&] {
    check_cap(n, cfg.geom_cap, "pointihedron", binomial(2 * n - 1, n));
    CertReport r;
    r.claim = "thm-contraction-calculus";
    r.instance = regular_instance(n);
    r.expected = "every pointihedron geodesic between the lifted pair loses l >= 2 steps under contraction; k >= d(U,V)+2";
    Polygon poly = regular_polygon(n);
    Thm62Instance inst = thm62_instance(poly);
    Pointihedron g = build_pointihedron(make_punctured(poly, inst.placement));
    int u = *g.find(Stratum::Punctured, inst.lifted_u);
    int v = *g.find(Stratum::Punctured, inst.lifted_v);
    TopoArc alpha = TopoArc::radial(inst.shared_vertex);
    bool alpha_everywhere = true;
    std::vector<std::optional<DiskTriangulation>> image(g.closure.keys.size());
    auto img = [&](int x) -> const DiskTriangulation& {
      if (!image[x]) {
        const PointKey& k = g.closure.keys[x];
        if (k.stratum == Stratum::Plain) {
          image[x] = g.plain.to_disk(k.arcs);
        } else {
          TopoTriangulation t = g.punctured.to_topo(k.arcs);
          if (!t.contains(alpha)) {
            alpha_everywhere = false;
            image[x] = DiskTriangulation{n, {}};
          } else {
            image[x] = contract_radial(t, alpha);
          }
        }
      }
      return *image[x];
    };
    auto same = [&](int x, int y) { return img(x) == img(y); };
    auto adjacent = [&](int x, int y) {
      std::vector<Chord> diff;
      std::set_difference(img(x).chords.begin(), img(x).chords.end(), img(y).chords.begin(), img(y).chords.end(),
                          std::back_inserter(diff));
      return diff.size() == 1 && img(x).chords.size() == img(y).chords.size();
    };
    WalkAudit a = audit_projection(g.graph(), u, v, same, adjacent);
    bool ends_ok = img(u) == g.plain.to_disk(inst.plain_u) && img(v) == g.plain.to_disk(inst.plain_v);
    r.instance["placement"] = point_json(inst.placement);
    r.computed = {{"shared_vertex", inst.shared_vertex},
                  {"U", g.plain.system().label(inst.plain_u)},
                  {"V", g.plain.system().label(inst.plain_v)},
                  {"d_plain", inst.plain_distance},
                  {"k", a.steps.distance},
                  {"l_min", a.steps.min_marked},
                  {"l_max", a.steps.max_marked},
                  {"radial_in_every_geodesic_vertex", alpha_everywhere},
                  {"contracts_to_endpoints", ends_ok},
                  {"walks_valid", a.walk_ok},
                  {"geodesic_min_l", path_json(g.graph(), a.steps.witness)}};
    r.pass = a.walk_ok && alpha_everywhere && ends_ok && a.steps.min_marked >= 2 &&
             a.steps.distance - a.steps.max_marked >= inst.plain_distance &&
             a.steps.distance >= inst.plain_distance + 2;
    if (!r.pass) r.witness = {{"bad_step", a.bad_step}, {"geodesic", r.computed["geodesic_min_l"]}};
    return r;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"diam-tn",   "zigzag",    "oracle",  "assoc",   "embedding",
                                              "crossing",  "projection", "bounds", "scp",     "heptagon",
                                              "nonconvex", "calculus",  "all"};
  return names;
}

std::vector<CertReport> run_suite(const std::string& name, const CertConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw InputError("unknown suite '" + name + "'");
  }
  std::vector<CertReport> out;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  auto placements_for = [&](const Polygon& poly, int extra) {
    return cfg.placements.empty() ? sample_placements(poly, extra) : cfg.placements;
  };
  if (want("diam-tn")) {
    for (int n = 1; n <= cfg.topo_cap; ++n) out.push_back(verify_diam_tn(n, cfg));
  }
  if (want("zigzag")) {
    for (int n = 1; n <= cfg.topo_cap; ++n) out.push_back(verify_zigzag(n, cfg));
  }
  if (want("oracle")) {
    for (int n = 1; n <= cfg.topo_cap; ++n) out.push_back(verify_oracle_tn(n, cfg));
    for (int n = 3; n <= std::min(9, cfg.assoc_cap); ++n) out.push_back(verify_oracle_an(n, cfg));
  }
  if (want("assoc")) {
    for (int n = 4; n <= cfg.assoc_cap; ++n) out.push_back(verify_assoc(n, cfg));
  }
  const int embed_top = std::min({6, cfg.geom_cap, cfg.topo_cap});
  if (want("embedding")) {
    for (int n = 3; n <= embed_top; ++n) out.push_back(verify_embedding_fpstar(n, placements_for(regular_polygon(n), 2), cfg));
  }
  if (want("crossing")) {
    for (int n = 3; n <= embed_top; ++n) out.push_back(verify_crossing(n, placements_for(regular_polygon(n), 2), cfg));
  }
  if (want("projection")) {
    for (int n = 3; n <= std::min(5, embed_top); ++n) {
      out.push_back(verify_projection(n, placements_for(regular_polygon(n), 2), cfg));
    }
  }
  if (want("bounds")) {
    for (int n = 4; n <= cfg.geom_cap; ++n) {
      Polygon poly = regular_polygon(n);
      auto pts = cfg.placements.empty() ? sample_placements(poly, 0) : cfg.placements;
      for (const auto& p : pts) out.push_back(verify_bounds_fpstar(poly, p, cfg));
    }
  }
  if (want("scp")) {
    for (int n = 5; n <= std::min(8, cfg.geom_cap); ++n) out.push_back(verify_scp(n, 1, cfg));
  }
  if (want("heptagon") && cfg.geom_cap >= 7) out.push_back(verify_heptagon(cfg.placements, cfg));
  if (want("nonconvex")) {
    for (int n = 4; n <= std::min(9, cfg.geom_cap + 1); ++n) {
      for (const auto& poly : one_reflex_battery(n)) out.push_back(verify_nonconvex(poly, cfg));
    }
  }
  if (want("calculus")) {
    for (int n = 1; n + 1 <= std::min(6, cfg.topo_cap); ++n) out.push_back(verify_deletion_calculus(n, cfg));
    for (int n = 5; n <= std::min(6, cfg.geom_cap); ++n) out.push_back(verify_contraction_calculus(n, cfg));
  }
  return out;
}

bool suite_passes(const std::vector<CertReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CertReport& r) { return r.evidence || r.pass; });
}

}  // namespace flipforge
