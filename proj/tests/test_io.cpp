#include "doctest.h"
#include "flipforge/errors.hpp"
#include "flipforge/io.hpp"
#include "flipforge/topo.hpp"

using namespace flipforge;

TEST_CASE("polygon files round trip with reduced fractions and sorted keys") {
  const char* text = R"({"vertices": [["0","0"], ["4/2","0"], ["2", "6/3"], [0, "2"]], "puncture": ["1/2", "3/6"]})";
  PolygonFile f = parse_polygon_json(text);
  CHECK(f.polygon.size() == 4);
  REQUIRE(f.puncture.has_value());
  CHECK(*f.puncture == Point2(Rational(1, 2), Rational(1, 2)));
  std::string out = polygon_json_text(f.polygon, f.puncture);
  CHECK(out.find("\"puncture\"") < out.find("\"vertices\""));
  CHECK(out.find("\"1/2\"") != std::string::npos);
  CHECK(out.find("4/2") == std::string::npos);
  PolygonFile again = parse_polygon_json(out);
  CHECK(polygon_json_text(again.polygon, again.puncture) == out);
  CHECK(polygon_json_text(f.polygon, std::nullopt).find("\"puncture\": null") != std::string::npos);
}

TEST_CASE("polygon file errors") {
  CHECK_THROWS_AS(parse_polygon_json("{"), InputError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"puncture": null})"), InputError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [["0","0"], ["1","0"]]})"), InputError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [["0","0"], ["1","0"], ["0","1/0"]]})"), InputError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [["0","0"], ["1","0"], ["0"]]})"), InputError);
}

TEST_CASE("placement files") {
  auto pts = parse_placements_json(R"([["1/3", "1/3"], ["0", "-2/4"]])");
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == Point2(Rational(0), Rational(-1, 2)));
  CHECK_THROWS_AS(parse_placements_json(R"({"a": 1})"), InputError);
  CHECK_THROWS_AS(read_text_file("/nonexistent/flipforge"), InputError);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("R 1,R 2") == "\"R 1,R 2\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("graph exports are sorted by label") {
  auto c = build_system_graph(disk_system(5));
  std::string dot = export_dot(c.graph);
  CHECK(dot.rfind("graph flipgraph {\n", 0) == 0);
  CHECK(dot.find("\"D 1 3,D 1 4\";\n") < dot.find("\"D 1 3,D 3 5\";\n"));
  int vertex_lines = 0;
  int edge_lines = 0;
  for (std::size_t pos = 0; (pos = dot.find(";\n", pos)) != std::string::npos; ++pos) {
    std::size_t start = dot.rfind('\n', pos - 1);
    (dot.substr(start, pos - start).find(" -- ") != std::string::npos ? edge_lines : vertex_lines)++;
  }
  CHECK(vertex_lines == 5);
  CHECK(edge_lines == 5);

  std::string json = export_graph_json(c.graph);
  CHECK(json.rfind("{\"edges\":[[0,1],", 0) == 0);
  CHECK(json.find("\"labels\":[\"D 1 3,D 1 4\",") != std::string::npos);

  auto t = build_system_graph(punctured_disk_system(2), Stratum::Punctured);
  CHECK(export_dot(t.graph).find("[stratum=punctured]") != std::string::npos);
  CHECK(export_graph_csv(t.graph).rfind("source,target\r\n", 0) == 0);
}

TEST_CASE("distance exports") {
  // T_2 is a path of three triangulations with the fan in the middle.
  auto c = build_system_graph(punctured_disk_system(2));
  CHECK(export_distances_csv(c.graph) ==
        "source,\"R 1,C 1 1\",\"R 1,R 2\",\"R 2,C 2 2\"\r\n"
        "\"R 1,C 1 1\",0,1,2\r\n"
        "\"R 1,R 2\",1,0,1\r\n"
        "\"R 2,C 2 2\",2,1,0\r\n");
  CHECK(export_distances_json(c.graph) ==
        "{\"distances\":[[0,1,2],[1,0,1],[2,1,0]],\"labels\":[\"R 1,C 1 1\",\"R 1,R 2\",\"R 2,C 2 2\"]}\n");
  auto t6 = build_system_graph(punctured_disk_system(4));
  CHECK(export_distances_csv(t6.graph, 1) == export_distances_csv(t6.graph, 3));
}
