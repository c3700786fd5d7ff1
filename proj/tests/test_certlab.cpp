#include <cstdlib>

#include "doctest.h"
#include "flipforge/certlab.hpp"
#include "flipforge/errors.hpp"
#include "flipforge/pointihedron.hpp"

using namespace flipforge;

TEST_CASE("FLIPFORGE_CAP overrides both caps") {
  ::setenv("FLIPFORGE_CAP", "5", 1);
  CertConfig cfg = default_config();
  CHECK(cfg.topo_cap == 5);
  CHECK(cfg.geom_cap == 5);
  ::setenv("FLIPFORGE_CAP", "five", 1);
  CHECK_THROWS_AS(default_config(), InputError);
  ::unsetenv("FLIPFORGE_CAP");
  CHECK(default_config().topo_cap == 7);
  CHECK(default_config().geom_cap == 8);
}

TEST_CASE("diameter reports") {
  for (int n : {1, 4, 6}) {
    CertReport r = verify_diam_tn(n);
    CHECK(r.pass);
    CHECK(r.computed["diameter"] == 2 * n - 2);
    CHECK(r.witness.is_null());
  }
  try {
    verify_diam_tn(8);
    FAIL("cap not enforced");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("6435") != std::string::npos);
  }
  CertConfig big;
  big.topo_cap = 3;
  CHECK_THROWS_AS(verify_diam_tn(4, big), CapExceeded);
}

TEST_CASE("report serialization is deterministic and omits timing") {
  CertReport a = verify_zigzag(4);
  CertReport b = verify_zigzag(4);
  CHECK(a.pass);
  CHECK(a.computed["distance"] == 6);
  CHECK(a.computed["geodesic"].size() == 7);
  std::string js = a.to_json().dump();
  CHECK(js == b.to_json().dump());
  CHECK(js.rfind("{\"claim\":\"lemma-zigzag\",\"computed\":", 0) == 0);
  CHECK(js.find("duration_ms") == std::string::npos);
  CHECK(a.to_json(true).contains("duration_ms"));
  CHECK(a.table_row().rfind("PASS  lemma-zigzag  {\"n\":4}", 0) == 0);
}

TEST_CASE("oracle and associahedron reports") {
  CHECK(verify_oracle_tn(5).pass);
  CHECK(verify_oracle_an(7).pass);
  CertReport r = verify_assoc(6);
  CHECK(r.pass);
  CHECK(r.computed["vertices"] == 14);
  CHECK(r.computed["diameter"] == 4);
}

TEST_CASE("sampled placements are interior and reproducible") {
  for (int n = 3; n <= 8; ++n) {
    Polygon poly = regular_polygon(n);
    auto a = sample_placements(poly, 3);
    CHECK(a.size() == 6);
    CHECK(a == sample_placements(poly, 3));
    for (const Point2& p : a) CHECK(locate(poly, p) == Location::Inside);
  }
}

TEST_CASE("embedding audit") {
  Polygon square = regular_polygon(4);
  CertReport r = verify_embedding_fpstar(4, sample_placements(square, 2));
  CHECK(r.pass);
  CHECK(r.computed["placements"].size() == 5);
  CHECK(verify_embedding_fpstar(3, {average(regular_polygon(3).vertices())}).pass);
  // Near an edge of the pentagon a T_5 geodesic leaves F(P*) through an
  // unrealizable arc, although some geodesic stays inside.
  Polygon pentagon = regular_polygon(5);
  Point2 near_edge = sample_placements(pentagon, 0)[2];
  CertReport bad = verify_embedding_fpstar(5, {near_edge});
  CHECK_FALSE(bad.pass);
  CHECK(bad.computed["placements"][0]["convexity"]["weak"] == true);
  CHECK(bad.computed["placements"][0]["shared_arc_preserved"] == true);
  REQUIRE(bad.witness["convexity"].contains("strong_violation"));
  CHECK(bad.witness["convexity"]["strong_violation"].size() == 3);
}

TEST_CASE("crossing and projection reports") {
  Polygon poly = regular_polygon(4);
  CHECK(verify_crossing(4, sample_placements(poly, 1)).pass);
  CertReport pi3 = verify_projection(3, sample_placements(regular_polygon(3), 1));
  CHECK(pi3.pass);
  CertReport pi4 = verify_projection(4, {average(poly.vertices())});
  CHECK_FALSE(pi4.pass);
  CHECK(pi4.computed["placements"][0]["identity_failures"] == 0);
  CHECK(pi4.computed["placements"][0]["max_image_distance"] == 2);
  CHECK(pi4.witness["edge"]["image_distance"] == 2);
}

TEST_CASE("bounds reports") {
  Polygon square = regular_polygon(4);
  CertReport sq = verify_bounds_fpstar(square, sample_placements(square, 0)[1]);
  CHECK(sq.pass);
  CHECK(sq.computed["diam_fpstar"] <= 2);
  Polygon hexagon = regular_polygon(6);
  CertReport hex = verify_bounds_fpstar(hexagon, average(hexagon.vertices()));
  CHECK(hex.pass);
  CHECK(hex.computed["diam_an"] == 4);
  CHECK(hex.computed["diam_pointihedron"] <= 7);
  CHECK(hex.computed["min_puncture_degree"] >= 3);
  CHECK(hex.computed["split_demo"]["parts_within_subgraph_diameter"] == true);
  CHECK_THROWS_AS(verify_bounds_fpstar(one_reflex_battery(5)[0], Point2(0L, 0L)), InputError);
}

TEST_CASE("scp reports") {
  CertReport r = verify_scp(5, 1);
  CHECK(r.pass);
  CHECK(r.computed["asserted"].size() == 2);
  CHECK(r.computed["evidence_probes"].size() == 3);
  CHECK(verify_scp(7, 3).pass);
  CHECK_THROWS_AS(verify_scp(4, 1), InputError);
}

TEST_CASE("non-convex reports") {
  CHECK_THROWS_AS(verify_nonconvex(regular_polygon(5)), InputError);
  for (const Polygon& arrow : one_reflex_battery(4)) {
    CertReport r = verify_nonconvex(arrow);
    CHECK(r.pass);
    CHECK(r.computed["vertices"] == 1);
    CHECK(r.computed["diameter"] == 0);
  }
  for (const Polygon& hex : one_reflex_battery(6)) {
    CertReport r = verify_nonconvex(hex);
    CHECK(r.pass);
    CHECK(r.computed["excluded_chords"] >= 1);
    CHECK(r.computed["diameter"] >= 2);
  }
}

TEST_CASE("heptagon report") {
  CertReport r = verify_heptagon({});
  CHECK(r.pass);
  CHECK(r.computed["d_pointihedron"] == 6);
  CHECK(r.computed["d_intrinsic"] == 7);
  CHECK(r.computed["convexity"]["strong"] == false);
  CHECK(r.computed["convexity"]["weak"] == false);
  CertConfig small;
  small.geom_cap = 6;
  CHECK_THROWS_AS(verify_heptagon({}, small), CapExceeded);
}

TEST_CASE("projection calculus reports") {
  for (int n = 1; n <= 5; ++n) {
    CertReport r = verify_deletion_calculus(n);
    CHECK(r.pass);
    CHECK(r.computed["k"] == 2 * n);
    CHECK(r.computed["l_min"] >= 2);
  }
  for (int n = 5; n <= 6; ++n) {
    CertReport r = verify_contraction_calculus(n);
    CHECK(r.pass);
    CHECK(r.computed["k"] >= r.computed["d_plain"].get<int>() + 2);
  }
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope", {}), InputError);
  CertConfig cfg;
  cfg.topo_cap = 4;
  auto reports = run_suite("diam-tn", cfg);
  CHECK(reports.size() == 4);
  CHECK(suite_passes(reports));
  reports.back().pass = false;
  CHECK_FALSE(suite_passes(reports));
  reports.back().evidence = true;
  CHECK(suite_passes(reports));
}
