// Acceptance suite: one line per criterion, exact comparisons only.

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "flipforge/certlab.hpp"
#include "flipforge/pointihedron.hpp"

using namespace flipforge;

namespace {

using Diagonals = std::set<std::pair<int, int>>;

// Independent associahedron: triangulations of a convex polygon by recursion
// on the triangle over edge (0, n-1); flips are pairs differing in one diagonal.
std::vector<Diagonals> triangulate(int i, int j) {
  if (j - i < 2) return {Diagonals{}};
  std::vector<Diagonals> out;
  for (int k = i + 1; k < j; ++k) {
    for (const auto& left : triangulate(i, k)) {
      for (const auto& right : triangulate(k, j)) {
        Diagonals d = left;
        d.insert(right.begin(), right.end());
        if (k - i > 1) d.insert({i, k});
        if (j - k > 1) d.insert({k, j});
        out.push_back(d);
      }
    }
  }
  return out;
}

std::pair<int, int> oracle_assoc(int n) {
  auto ts = triangulate(0, n - 1);
  const int m = static_cast<int>(ts.size());
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      std::vector<std::pair<int, int>> diff;
      std::set_difference(ts[a].begin(), ts[a].end(), ts[b].begin(), ts[b].end(), std::back_inserter(diff));
      if (diff.size() == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  int diam = 0;
  for (int s = 0; s < m; ++s) {
    std::vector<int> d(m, -1);
    std::deque<int> q{s};
    d[s] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x]) {
        if (d[y] < 0) {
          d[y] = d[x] + 1;
          q.push_back(y);
        }
      }
    }
    diam = std::max(diam, *std::max_element(d.begin(), d.end()));
  }
  return {m, diam};
}

unsigned long binomial(int n, int k) {
  unsigned long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long>(n - k + i) / static_cast<unsigned long>(i);
  return r;
}

const int kTnSizes[] = {1, 3, 10, 35, 126, 462, 1716};
const int kAssocDiameters[] = {1, 2, 4, 5, 7, 9, 11};  // n = 4..10

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string witness;
};

void absorb(Outcome& o, const CertReport& r) {
  if (r.evidence || r.pass) return;
  if (o.pass) o.witness = r.claim + " " + r.instance.dump() + " witness=" + r.witness.dump();
  o.pass = false;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  if (o.pass) o.witness = what;
  o.pass = false;
}

int failures = 0;

void report(int id, const std::string& claim, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.witness = std::string("exception: ") + e.what();
  }
  std::printf("criterion %2d  %s  %s%s%s\n", id, o.pass ? "PASS" : "FAIL", claim.c_str(),
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  if (!o.pass) {
    std::printf("              counterexample: %s\n", o.witness.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  CertConfig cfg;
  cfg.jobs = 4;

  report(1, "diam(T_n) = 2n-2 for n = 1..7", [&] {
    Outcome o;
    std::string sizes;
    for (int n = 1; n <= 7; ++n) {
      CertReport r = verify_diam_tn(n, cfg);
      absorb(o, r);
      int v = r.computed["vertices"];
      require(o, v == kTnSizes[n - 1], "|T_" + std::to_string(n) + "| = " + std::to_string(v));
      require(o, static_cast<unsigned long>(v) == binomial(2 * n - 1, n), "|T_n| != C(2n-1, n)");
      require(o, r.computed["diameter"] == 2 * n - 2, "diameter mismatch at n = " + std::to_string(n));
      sizes += (n > 1 ? "," : "") + std::to_string(v);
    }
    o.detail = "|T_n| = " + sizes;
    return o;
  });

  report(2, "zigzag pair at distance exactly 2n-2 for n = 1..7", [&] {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
      CertReport r = verify_zigzag(n, cfg);
      absorb(o, r);
      require(o, r.computed["distance"] == 2 * n - 2, "zigzag distance at n = " + std::to_string(n));
    }
    return o;
  });

  report(3, "closure = maximal-set enumeration for T_n (n <= 7) and A_n (n <= 9)", [&] {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
      CertReport r = verify_oracle_tn(n, cfg);
      absorb(o, r);
      require(o, r.computed["set_size"] == n, "T_n set size");
    }
    for (int n = 3; n <= 9; ++n) {
      CertReport r = verify_oracle_an(n, cfg);
      absorb(o, r);
      require(o, r.computed["set_size"] == n - 3, "A_n set size");
    }
    return o;
  });

  report(4, "diam(A_n) golden for n = 4..10 and |A_n| = Catalan(n-2)", [&] {
    Outcome o;
    std::string diams;
    for (int n = 4; n <= 10; ++n) {
      CertReport r = verify_assoc(n, cfg);
      absorb(o, r);
      auto [size, diam] = oracle_assoc(n);
      int d = r.computed["diameter"];
      require(o, r.computed["vertices"] == size, "independent enumeration size at n = " + std::to_string(n));
      require(o, d == diam, "independent BFS diameter at n = " + std::to_string(n));
      require(o, d == kAssocDiameters[n - 4], "golden diameter at n = " + std::to_string(n));
      diams += (n > 4 ? "," : "") + std::to_string(d);
    }
    o.detail = "diam = " + diams;
    return o;
  });

  report(5, "F(P*) strongly convex in T_n, n = 3..6, 5 placements each, shared arcs kept", [&] {
    Outcome o;
    int placements = 0;
    int strong = 0;
    int weak = 0;
    for (int n = 3; n <= 6; ++n) {
      auto pts = sample_placements(regular_polygon(n), 2);
      require(o, pts.size() >= 5, "fewer than 5 placements");
      CertReport r = verify_embedding_fpstar(n, pts, cfg);
      absorb(o, r);
      for (const auto& row : r.computed["placements"]) {
        ++placements;
        strong += row["convexity"]["strong"].get<bool>() ? 1 : 0;
        weak += row["convexity"]["weak"].get<bool>() ? 1 : 0;
        require(o, row["shared_arc_preserved"].get<bool>(), "shared arc lost");
      }
    }
    o.detail = "strong " + std::to_string(strong) + "/" + std::to_string(placements) + ", weak " +
               std::to_string(weak) + "/" + std::to_string(placements);
    return o;
  });

  report(6, "segment crossing = topological incompatibility on all instances of criterion 5", [&] {
    Outcome o;
    long pairs = 0;
    for (int n = 3; n <= 6; ++n) {
      CertReport r = verify_crossing(n, sample_placements(regular_polygon(n), 2), cfg);
      absorb(o, r);
      for (const auto& row : r.computed["placements"]) pairs += row["pairs"].get<long>();
    }
    o.detail = std::to_string(pairs) + " arc pairs";
    return o;
  });

  report(7, "diam F(P*) <= 2n-6 and diam Fbar <= diam(A_n)+3, n = 4..8, 3 placements each", [&] {
    Outcome o;
    std::string observed;
    for (int n = 4; n <= 8; ++n) {
      Polygon poly = regular_polygon(n);
      int worst_bar = 0;
      for (const Point2& p : sample_placements(poly, 0)) {
        CertReport r = verify_bounds_fpstar(poly, p, cfg);
        absorb(o, r);
        require(o, r.computed["diam_an"] == kAssocDiameters[n - 4], "diam(A_n) golden");
        require(o, r.computed["diam_fpstar"].get<int>() <= 2 * n - 6, "Lemma bound");
        require(o, r.computed["diam_pointihedron"].get<int>() <= kAssocDiameters[n - 4] + 3, "Fbar bound");
        worst_bar = std::max(worst_bar, r.computed["diam_pointihedron"].get<int>());
      }
      observed += (n > 4 ? "," : "") + std::to_string(worst_bar) + (worst_bar >= 2 * n - 8 ? ">=" : "<") + "2n-8";
    }
    o.detail = "max diam Fbar: " + observed;
    return o;
  });

  report(8, "plain stratum strongly convex in Fbar for n = 5..8, both placement types", [&] {
    Outcome o;
    int asserted = 0;
    int probes = 0;
    int probe_strong = 0;
    for (int n = 5; n <= 8; ++n) {
      CertReport r = verify_scp(n, 1, cfg);
      absorb(o, r);
      for (const auto& kind : {"in-triangle", "beyond-triangle"}) {
        bool seen = false;
        for (const auto& row : r.computed["asserted"]) seen = seen || row["kind"] == kind;
        require(o, seen, std::string("no ") + kind + " placement at n = " + std::to_string(n));
      }
      asserted += static_cast<int>(r.computed["asserted"].size());
      for (const auto& row : r.computed["evidence_probes"]) {
        ++probes;
        probe_strong += row["convexity"]["strong"].get<bool>() ? 1 : 0;
      }
    }
    o.detail = std::to_string(asserted) + " asserted placements; evidence probes strong " +
               std::to_string(probe_strong) + "/" + std::to_string(probes);
    return o;
  });

  report(9, "heptagon: d_Fbar <= 6 < 7 <= d_F(P*), punctured stratum neither strongly nor weakly convex", [&] {
    Outcome o;
    CertReport r = verify_heptagon({}, cfg);
    absorb(o, r);
    require(o, r.computed["d_pointihedron"].get<int>() <= 6, "d_Fbar > 6");
    require(o, r.computed["d_intrinsic"].get<int>() >= 7, "d_F(P*) < 7");
    require(o, !r.computed["convexity"]["strong"].get<bool>(), "strongly convex");
    require(o, !r.computed["convexity"]["weak"].get<bool>(), "weakly convex");
    o.detail = "d = " + r.computed["d_pointihedron"].dump() + " vs " + r.computed["d_intrinsic"].dump();
    return o;
  });

  report(10, "pi is the identity on F(P*) and maps flips to equal-or-adjacent, n <= 5", [&] {
    Outcome o;
    long edges = 0;
    long stretched = 0;
    long completed = 0;
    for (int n = 3; n <= 5; ++n) {
      CertReport r = verify_projection(n, sample_placements(regular_polygon(n), 2), cfg);
      absorb(o, r);
      for (const auto& row : r.computed["placements"]) {
        require(o, row["identity_failures"] == 0, "identity clause");
        edges += row["tn_edges"].get<long>();
        stretched += row["stretched_edges"].get<long>();
        completed += row["completed_images"].get<long>();
      }
    }
    o.detail = "completed images " + std::to_string(completed) + ", stretched edges " + std::to_string(stretched) +
               "/" + std::to_string(edges);
    return o;
  });

  report(11, "one-reflex F(P) connected and induced in A_n (n <= 9); fixed-arc subgraphs strongly convex", [&] {
    Outcome o;
    int polygons = 0;
    for (int n = 4; n <= 9; ++n) {
      for (const Polygon& poly : one_reflex_battery(n)) {
        CertReport r = verify_nonconvex(poly, cfg);
        absorb(o, r);
        require(o, r.computed["fixed_arc_audited"].get<bool>() == (n <= 8), "fixed-arc audit coverage");
        ++polygons;
      }
    }
    o.detail = std::to_string(polygons) + " polygons";
    return o;
  });

  report(12, "deletion and contraction map geodesics to walks of length k-l, l >= 2", [&] {
    Outcome o;
    std::string ls;
    for (int n = 1; n + 1 <= 6; ++n) {
      CertReport r = verify_deletion_calculus(n, cfg);
      absorb(o, r);
      require(o, r.computed["l_min"].get<int>() >= 2, "l < 2");
      ls += (n > 1 ? "," : "") + r.computed["l_min"].dump();
    }
    for (int n = 5; n <= 6; ++n) {
      CertReport r = verify_contraction_calculus(n, cfg);
      absorb(o, r);
      require(o, r.computed["l_min"].get<int>() >= 2, "l < 2");
      ls += "," + r.computed["l_min"].dump();
    }
    o.detail = "l_min = " + ls;
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
