#include "flipforge/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "flipforge/errors.hpp"

namespace flipforge {

namespace {

using Json = nlohmann::json;

Rational rational_of(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational string such as \"3/4\"");
}

Point2 point_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected a pair [x, y]");
  return {rational_of(j[0], where), rational_of(j[1], where)};
}

Json point_json(const Point2& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<int> label_order(const FlipGraph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.labels[a] < g.labels[b]; });
  return order;
}

std::vector<int> rank_of(const std::vector<int>& order) {
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

std::vector<std::pair<int, int>> sorted_edges(const FlipGraph& g, const std::vector<int>& rank) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.adjacency[u]) {
      if (rank[u] < rank[v]) edges.emplace_back(rank[u], rank[v]);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PolygonFile parse_polygon_json(std::string_view text) {
  Json j = parse(text);
  if (!j.is_object() || !j.contains("vertices")) throw InputError("polygon file needs a \"vertices\" list");
  const Json& vs = j["vertices"];
  if (!vs.is_array()) throw InputError("\"vertices\" must be a list");
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(point_of(vs[i], "vertex " + std::to_string(i + 1)));
  PolygonFile out{validate_polygon(pts), std::nullopt};
  if (j.contains("puncture") && !j["puncture"].is_null()) out.puncture = point_of(j["puncture"], "puncture");
  return out;
}

std::string polygon_json_text(const Polygon& poly, const std::optional<Point2>& puncture) {
  Json vs = Json::array();
  for (const auto& v : poly.vertices()) vs.push_back(point_json(v));
  Json j{{"vertices", vs}, {"puncture", puncture ? point_json(*puncture) : Json(nullptr)}};
  return j.dump(2) + "\n";
}

std::vector<Point2> parse_placements_json(std::string_view text) {
  Json j = parse(text);
  if (!j.is_array()) throw InputError("placement file must be a JSON list of points");
  std::vector<Point2> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_of(j[i], "placement " + std::to_string(i + 1)));
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string export_dot(const FlipGraph& g) {
  auto order = label_order(g);
  auto rank = rank_of(order);
  std::ostringstream os;
  os << "graph flipgraph {\n";
  for (int v : order) {
    os << "  " << dot_quote(g.labels[v]);
    if (g.strata[v] != Stratum::None) os << " [stratum=" << to_string(g.strata[v]) << "]";
    os << ";\n";
  }
  for (auto [a, b] : sorted_edges(g, rank)) os << "  " << dot_quote(g.labels[order[a]]) << " -- " << dot_quote(g.labels[order[b]]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_graph_json(const FlipGraph& g) {
  auto order = label_order(g);
  auto rank = rank_of(order);
  Json labels = Json::array();
  Json strata = Json::array();
  for (int v : order) {
    labels.push_back(g.labels[v]);
    strata.push_back(to_string(g.strata[v]));
  }
  Json edges = Json::array();
  for (auto [a, b] : sorted_edges(g, rank)) edges.push_back({a, b});
  return Json{{"edges", edges}, {"labels", labels}, {"strata", strata}}.dump() + "\n";
}

std::string export_graph_csv(const FlipGraph& g) {
  auto order = label_order(g);
  auto rank = rank_of(order);
  std::ostringstream os;
  os << "source,target\r\n";
  for (auto [a, b] : sorted_edges(g, rank)) {
    os << csv_field(g.labels[order[a]]) << "," << csv_field(g.labels[order[b]]) << "\r\n";
  }
  return os.str();
}

std::string export_distances_json(const FlipGraph& g, int jobs) {
  auto order = label_order(g);
  auto dist = distance_matrix(g, jobs);
  Json labels = Json::array();
  Json rows = Json::array();
  for (int u : order) {
    labels.push_back(g.labels[u]);
    Json row = Json::array();
    for (int v : order) row.push_back(dist[u][v]);
    rows.push_back(row);
  }
  return Json{{"distances", rows}, {"labels", labels}}.dump() + "\n";
}

std::string export_distances_csv(const FlipGraph& g, int jobs) {
  auto order = label_order(g);
  auto dist = distance_matrix(g, jobs);
  std::ostringstream os;
  os << "source";
  for (int v : order) os << "," << csv_field(g.labels[v]);
  os << "\r\n";
  for (int u : order) {
    os << csv_field(g.labels[u]);
    for (int v : order) os << "," << dist[u][v];
    os << "\r\n";
  }
  return os.str();
}

}  // namespace flipforge
