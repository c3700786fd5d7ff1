#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flipforge/flipgraph.hpp"
#include "flipforge/geometry.hpp"

namespace flipforge {

/// Polygon file: {"puncture": [x, y] | null, "vertices": [[x, y], ...]} with
/// rational strings. The polygon is validated on read.
struct PolygonFile {
  Polygon polygon;
  std::optional<Point2> puncture;
};

PolygonFile parse_polygon_json(std::string_view text);
std::string polygon_json_text(const Polygon& poly, const std::optional<Point2>& puncture);

/// Placement file: a JSON list of rational points.
std::vector<Point2> parse_placements_json(std::string_view text);

/// Reads a whole file; InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

/// Exports list vertices in label order, so they do not depend on discovery order.
std::string export_dot(const FlipGraph& g);
std::string export_graph_json(const FlipGraph& g);
std::string export_graph_csv(const FlipGraph& g);
std::string export_distances_json(const FlipGraph& g, int jobs = 1);
std::string export_distances_csv(const FlipGraph& g, int jobs = 1);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace flipforge
