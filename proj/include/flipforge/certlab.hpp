#pragma once

// Claim-by-claim verification procedures. Each returns a CertReport whose
// pass flag is a pure function of its computed values.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "flipforge/geometry.hpp"

namespace flipforge {

using Json = nlohmann::json;

struct CertReport {
  std::string claim;
  Json instance = Json::object();
  Json computed = Json::object();
  std::string expected;
  bool pass = true;
  /// Evidence-only reports never fail a suite.
  bool evidence = false;
  Json witness = nullptr;
  double duration_ms = 0;

  /// Keys sorted; duration only when requested so output is reproducible.
  Json to_json(bool with_duration = false) const;
  std::string table_row() const;
};

struct CertConfig {
  int topo_cap = 7;
  int geom_cap = 8;
  int assoc_cap = 10;
  int jobs = 1;
  /// Overrides the generated placements where a suite uses placements.
  std::vector<Point2> placements;
};

/// Defaults with FLIPFORGE_CAP (if set) applied to the topological and
/// geometric caps.
CertConfig default_config();

/// Centroid, a point near vertex 1, a point near edge 1-2, then `extra`
/// seeded pseudo-random interior convex combinations of the vertices.
std::vector<Point2> sample_placements(const Polygon& poly, int extra, unsigned seed = 20240601);

/// One-reflex polygons: a regular n-gon with vertex n pushed inside the chord
/// joining its neighbours, at two depths.
std::vector<Polygon> one_reflex_battery(int n);

CertReport verify_diam_tn(int n, const CertConfig& cfg = {});
CertReport verify_zigzag(int n, const CertConfig& cfg = {});
CertReport verify_oracle_tn(int n, const CertConfig& cfg = {});
CertReport verify_oracle_an(int n, const CertConfig& cfg = {});
CertReport verify_assoc(int n, const CertConfig& cfg = {});
CertReport verify_embedding_fpstar(int n, const std::vector<Point2>& placements, const CertConfig& cfg = {});
CertReport verify_crossing(int n, const std::vector<Point2>& placements, const CertConfig& cfg = {});
CertReport verify_projection(int n, const std::vector<Point2>& placements, const CertConfig& cfg = {});
CertReport verify_scp(int n, int corner, const CertConfig& cfg = {});
CertReport verify_bounds_fpstar(const Polygon& poly, const Point2& placement, const CertConfig& cfg = {});
CertReport verify_nonconvex(const Polygon& poly, const CertConfig& cfg = {});
CertReport verify_heptagon(const std::vector<Point2>& placements, const CertConfig& cfg = {});
/// Vertex deletion along every geodesic between the reflected zigzag pair on
/// n + 1 vertices.
CertReport verify_deletion_calculus(int n, const CertConfig& cfg = {});
/// Contraction along the shared radial for every geodesic between the lifted
/// farthest pair of thm62_instance.
CertReport verify_contraction_calculus(int n, const CertConfig& cfg = {});

const std::vector<std::string>& suite_names();
/// Runs a named suite ("all" runs every suite). Throws InputError for unknown names.
std::vector<CertReport> run_suite(const std::string& name, const CertConfig& cfg);

/// True iff every non-evidence report passes.
bool suite_passes(const std::vector<CertReport>& reports);

}  // namespace flipforge
