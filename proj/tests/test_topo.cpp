#include <algorithm>
#include <set>

#include "doctest.h"
#include "flipforge/flipgraph.hpp"
#include "flipforge/topo.hpp"

using namespace flipforge;

namespace {

TopoArc R(int v) { return TopoArc::radial(v); }
TopoArc C(int i, int j) { return TopoArc::cut(i, j); }

std::vector<TopoTriangulation> all_triangulations(int n) {
  ArcSystem sys = punctured_disk_system(n);
  std::vector<TopoTriangulation> out;
  for (const ArcSet& s : enumerate_maximal(sys)) out.push_back(decode_topo(sys, s, n));
  return out;
}

// Brute-force oracle: scans every subset of the universe.
std::set<std::vector<TopoArc>> brute_force_triangulations(int n) {
  std::vector<TopoArc> u = arc_universe(n);
  std::set<std::vector<TopoArc>> out;
  for (unsigned long mask = 0; mask < (1UL << u.size()); ++mask) {
    std::vector<TopoArc> s;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (mask >> k & 1UL) s.push_back(u[k]);
    }
    if (is_triangulation(s, n)) {
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("arc universe examples") {
  auto u3 = arc_universe(3);
  CHECK(u3.size() == 9);
  std::set<TopoArc> want{R(1), R(2), R(3), C(1, 1), C(2, 2), C(3, 3), C(2, 1), C(3, 2), C(1, 3)};
  CHECK(std::set<TopoArc>(u3.begin(), u3.end()) == want);

  CHECK(arc_universe(1) == std::vector<TopoArc>{R(1)});

  auto u2 = arc_universe(2);
  CHECK(u2.size() == 4);
  CHECK(classify(C(1, 2), 2) == ArcClass::Boundary);
  CHECK(classify(C(2, 1), 2) == ArcClass::Boundary);
  CHECK(classify(C(1, 1), 1) == ArcClass::Boundary);

  CHECK_THROWS_AS(arc_universe(0), InputError);
  for (int n = 1; n <= 9; ++n) CHECK(arc_universe(n).size() == static_cast<std::size_t>(n * n));
}

TEST_CASE("arc classification is total and exclusive") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        ArcClass c = classify(C(i, j), n);
        if (i == j) {
          CHECK(c == (n == 1 ? ArcClass::Boundary : ArcClass::Loop));
        } else if (j == i % n + 1) {
          CHECK(c == ArcClass::Boundary);
        } else {
          CHECK(c == ArcClass::Chord);
        }
      }
      CHECK(classify(R(i), n) == ArcClass::Radial);
    }
  }
  CHECK_THROWS_AS(classify(R(5), 4), InputError);
}

TEST_CASE("token round trip") {
  for (const auto& a : arc_universe(5)) CHECK(parse_topo_token(to_token(a)) == a);
  CHECK(to_token(C(2, 1)) == "C 2 1");
  CHECK_THROWS_AS(parse_topo_token("X 1"), InputError);
  CHECK_THROWS_AS(parse_topo_token("C 1"), InputError);
}

TEST_CASE("compatibility examples") {
  CHECK_FALSE(compatible(R(2), C(1, 3), 4));
  CHECK(compatible(C(1, 4), C(4, 1), 6));
  CHECK_FALSE(compatible(C(1, 4), C(3, 1), 6));
  CHECK_FALSE(compatible(C(1, 1), C(2, 2), 3));
  CHECK(compatible(R(1), C(1, 1), 3));
  CHECK_FALSE(compatible(R(2), C(1, 1), 3));
  // Cut(i, pred(i)) does not nest every other cut: its boundary walk skips edge (pred(i), i).
  CHECK_FALSE(compatible(C(1, 4), C(3, 2), 6));
  CHECK_THROWS_AS(compatible(C(1, 2), R(1), 4), InputError);
}

TEST_CASE("compatibility is symmetric and reflexive") {
  for (int n = 1; n <= 6; ++n) {
    auto u = arc_universe(n);
    for (const auto& a : u) {
      CHECK(compatible(a, a, n));
      for (const auto& b : u) CHECK(compatible(a, b, n) == compatible(b, a, n));
    }
  }
}

TEST_CASE("coexistence audit for Cut(1,4) and Cut(3,1)") {
  for (const auto& t : all_triangulations(6)) {
    CHECK_FALSE((t.contains(C(1, 4)) && t.contains(C(3, 1))));
  }
}

TEST_CASE("is_triangulation examples") {
  CHECK(is_triangulation({R(1), R(2), R(3)}, 3));
  CHECK_FALSE(is_triangulation({R(1), C(1, 1)}, 3));
  CHECK_FALSE(is_triangulation({C(1, 1), C(2, 2)}, 3));
  CHECK(is_triangulation(fan(5).arcs, 5));
}

TEST_CASE("brute-force subset oracle agrees with clique enumeration") {
  for (int n = 1; n <= 4; ++n) {
    auto brute = brute_force_triangulations(n);
    std::set<std::vector<TopoArc>> fast;
    for (const auto& t : all_triangulations(n)) fast.insert(t.arcs);
    CHECK(brute == fast);
  }
}

TEST_CASE("triangulation counts and cardinality") {
  // First-run goldens from exhaustive enumeration (cross-checked by an
  // independent prototype).
  const std::vector<std::size_t> golden{1, 3, 10, 35, 126, 462, 1716};
  for (int n = 1; n <= 7; ++n) {
    auto ts = all_triangulations(n);
    CHECK(ts.size() == golden[n - 1]);
    for (const auto& t : ts) CHECK(t.arcs.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("flip examples") {
  auto f = flip(fan(4), R(2));
  REQUIRE(f);
  CHECK(f->inserted == C(1, 3));
  CHECK(f->result == TopoTriangulation::from(4, {R(1), R(3), R(4), C(1, 3)}));

  auto loop_tri = TopoTriangulation::from(3, {C(1, 1), R(1), C(2, 1)});
  CHECK_FALSE(flip(loop_tri, R(1)));

  auto f2 = flip(fan(2), R(2));
  REQUIRE(f2);
  CHECK(f2->inserted == C(1, 1));

  CHECK_THROWS_AS(flip(fan(3), C(1, 1)), InputError);
}

TEST_CASE("flip involution, degree law and loop exclusivity") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : all_triangulations(n)) {
      int loops = 0;
      int flippable = 0;
      for (const auto& e : t.arcs) {
        if (e.is_loop()) ++loops;
        auto f = flip(t, e);
        if (!f) continue;
        ++flippable;
        CHECK(is_triangulation(f->result.arcs, n));
        auto back = flip(f->result, f->inserted);
        REQUIRE(back);
        CHECK(back->result == t);
        CHECK(back->inserted == e);
      }
      CHECK(loops <= 1);
      if (n == 1) {
        CHECK(flippable == 0);
      } else {
        CHECK(flippable == (loops == 1 ? n - 1 : n));
      }
      if (loops == 1) {
        auto loop = *std::find_if(t.arcs.begin(), t.arcs.end(), [](auto& a) { return a.is_loop(); });
        int radials = static_cast<int>(std::count_if(t.arcs.begin(), t.arcs.end(),
                                                     [](auto& a) { return a.is_radial(); }));
        CHECK(t.contains(R(loop.i)));
        CHECK(radials == 1);
      }
      bool has_radial = std::any_of(t.arcs.begin(), t.arcs.end(), [](auto& a) { return a.is_radial(); });
      CHECK(has_radial);
    }
  }
}

TEST_CASE("closure from the fan equals the enumeration") {
  for (int n = 1; n <= 7; ++n) {
    ArcSystem sys = punctured_disk_system(n);
    auto closure = build_system_graph(sys, encode(sys, fan(n)));
    auto all = enumerate_maximal(sys);
    std::vector<ArcSet> keys = closure.keys;
    std::sort(keys.begin(), keys.end());
    CHECK(keys == all);
  }
}

TEST_CASE("fan") {
  CHECK(fan(3).arcs == std::vector<TopoArc>{R(1), R(2), R(3)});
  CHECK(fan(1).arcs == std::vector<TopoArc>{R(1)});
}

TEST_CASE("zigzag pair") {
  CHECK(zigzag_minus(1).arcs == std::vector<TopoArc>{R(1)});
  CHECK(zigzag_minus(3) == TopoTriangulation::from(3, {C(1, 1), R(1), C(2, 1)}));
  CHECK(zigzag_minus(5) == TopoTriangulation::from(5, {C(1, 1), R(1), C(2, 1), C(2, 5), C(3, 5)}));
  for (int n = 1; n <= 7; ++n) CHECK(is_triangulation(zigzag_minus(n).arcs, n));

  auto p1 = zigzag_pair(1);
  CHECK(p1.minus == p1.plus);
  CHECK(p1.distance == 0);
  CHECK(zigzag_pair(3).distance == 4);
  CHECK(zigzag_pair(5).distance == 8);
}

TEST_CASE("dihedral action") {
  for (const auto& a : arc_universe(5)) CHECK(dihedral_action(Dihedral{}, a, 5) == a);
  CHECK(dihedral_action(Dihedral{1, false}, fan(3)) == fan(3));
  CHECK(dihedral_vertex(reflection_fixing_first(6), 2, 6) == 6);
  CHECK(dihedral_vertex(reflection_fixing_first(6), 1, 6) == 1);

  for (int n = 1; n <= 5; ++n) {
    auto u = arc_universe(n);
    for (const auto& g : dihedral_group(n)) {
      for (const auto& a : u) {
        for (const auto& b : u) {
          CHECK(compatible(a, b, n) == compatible(dihedral_action(g, a, n), dihedral_action(g, b, n), n));
        }
      }
    }
  }
}

TEST_CASE("dihedral action is a graph automorphism") {
  for (int n = 2; n <= 5; ++n) {
    ArcSystem sys = punctured_disk_system(n);
    auto closure = build_system_graph(sys);
    auto dist = distance_matrix(closure.graph);
    for (const auto& g : dihedral_group(n)) {
      std::vector<int> image(closure.keys.size());
      for (std::size_t v = 0; v < closure.keys.size(); ++v) {
        auto t = dihedral_action(g, decode_topo(sys, closure.keys[v], n));
        REQUIRE(is_triangulation(t.arcs, n));
        image[v] = closure.ids.at(encode(sys, t));
      }
      for (std::size_t u = 0; u < image.size(); ++u) {
        for (std::size_t v = 0; v < image.size(); ++v) CHECK(dist[u][v] == dist[image[u]][image[v]]);
      }
    }
  }
}

TEST_CASE("delete_vertex") {
  CHECK(delete_vertex(fan(3)) == fan(2));
  CHECK_THROWS_AS(delete_vertex(fan(1)), InputError);

  for (int n = 1; n <= 6; ++n) {
    auto rho = reflection_fixing_first(n + 1);
    CHECK(delete_vertex(dihedral_action(rho, zigzag_minus(n + 1))) == zigzag_minus(n));
  }
}

TEST_CASE("deletion maps triangulations and flips soundly") {
  for (int big = 2; big <= 6; ++big) {
    ArcSystem sys = punctured_disk_system(big);
    auto closure = build_system_graph(sys);
    for (std::size_t v = 0; v < closure.keys.size(); ++v) {
      auto t = decode_topo(sys, closure.keys[v], big);
      auto image = delete_vertex(t);
      REQUIRE(is_triangulation(image.arcs, big - 1));
      for (int w : closure.graph.adjacency[v]) {
        auto other = delete_vertex(decode_topo(sys, closure.keys[w], big));
        if (other == image) continue;
        std::vector<TopoArc> diff;
        std::set_difference(image.arcs.begin(), image.arcs.end(), other.arcs.begin(), other.arcs.end(),
                            std::back_inserter(diff));
        CHECK(diff.size() == 1);
      }
    }
  }
}

TEST_CASE("project_path_delete") {
  CHECK_THROWS_AS(project_path_delete({fan(3), zigzag_minus(3)}), InputError);

  // A flip inside the triangle on boundary edge (3, 1) collapses.
  auto t0 = fan(3);
  auto t1 = flip(t0, R(3))->result;  // introduces Cut(2,1)... check the projection
  auto proj = project_path_delete({t0, t1});
  CHECK(proj.path.size() + static_cast<std::size_t>(proj.repeats) == 2);

  // Geodesic between the paper-oriented zigzag pair on 4 vertices.
  const int big = 4;
  ArcSystem sys = punctured_disk_system(big);
  auto pair = zigzag_pair(big);
  auto rho = reflection_fixing_first(big);
  auto closure = build_system_graph(sys);
  int u = closure.ids.at(encode(sys, dihedral_action(rho, pair.minus)));
  int v = closure.ids.at(encode(sys, dihedral_action(rho, pair.plus)));
  FlipPath path = shortest_path(closure.graph, u, v);
  CHECK(path.length() == 2 * big - 2);
  std::vector<TopoTriangulation> seq;
  for (int x : path.vertices) seq.push_back(decode_topo(sys, closure.keys[x], big));
  auto projected = project_path_delete(seq);
  CHECK(projected.repeats >= 2);
  CHECK(static_cast<int>(projected.path.size()) - 1 == path.length() - projected.repeats);
}

TEST_CASE("contract_radial") {
  CHECK(contract_radial(fan(4), R(1)).chords == std::vector<Chord>{Chord{1, 3}});
  auto tri = TopoTriangulation::from(3, {C(1, 1), R(1), C(2, 1)});
  CHECK(contract_radial(tri, R(1)).chords.empty());
  CHECK_THROWS_AS(contract_radial(fan(4), C(1, 3)), InputError);
  CHECK_THROWS_AS(contract_radial(tri, R(2)), InputError);

  // Along every flip between triangulations containing Radial(a), the images
  // are identical or one disk flip apart.
  for (int n = 3; n <= 6; ++n) {
    ArcSystem sys = punctured_disk_system(n);
    ArcSystem disk = disk_system(n);
    auto closure = build_system_graph(sys);
    for (std::size_t v = 0; v < closure.keys.size(); ++v) {
      auto t = decode_topo(sys, closure.keys[v], n);
      for (int a = 1; a <= n; ++a) {
        if (!t.contains(R(a))) continue;
        auto img = contract_radial(t, R(a));
        REQUIRE(disk.is_triangulation(encode(disk, img)));
        for (int w : closure.graph.adjacency[v]) {
          auto s = decode_topo(sys, closure.keys[w], n);
          if (!s.contains(R(a))) continue;
          auto other = contract_radial(s, R(a));
          int diff = (encode(disk, img) ^ encode(disk, other)).count();
          CHECK((diff == 0 || diff == 2));
        }
      }
    }
  }
}

TEST_CASE("disk system") {
  CHECK_THROWS_AS(disk_system(2), InputError);
  ArcSystem a5 = disk_system(5);
  CHECK(a5.size() == 5);
  CHECK(enumerate_maximal(a5).size() == 5);
  CHECK_FALSE(chord_compatible({1, 3}, {2, 4}));
  CHECK(chord_compatible({1, 3}, {1, 4}));
  CHECK(chord_compatible({1, 3}, {4, 6}));

  auto a6 = build_system_graph(disk_system(6));
  CHECK(a6.graph.vertex_count() == 14);
  CHECK(diameter(a6.graph).value == 4);
}
