#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "flipforge/certlab.hpp"
#include "flipforge/errors.hpp"
#include "flipforge/geom_system.hpp"
#include "flipforge/io.hpp"
#include "flipforge/pointihedron.hpp"
#include "flipforge/topo.hpp"

using namespace flipforge;

namespace {

struct Options {
  int n = 0;
  int regular = 0;
  std::string polygon_path;
  std::vector<std::string> puncture;
  std::string from;
  std::string to;
  std::string suite;
  std::string what = "graph";
  std::string graph;
  std::string format = "table";
  std::string out;
  std::string placements_path;
  int cap = 0;
  int jobs = 1;
  bool timing = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

CertConfig config_of(const Options& o) {
  CertConfig cfg = default_config();
  if (o.cap > 0) cfg.topo_cap = cfg.geom_cap = o.cap;
  cfg.jobs = o.jobs;
  if (!o.placements_path.empty()) cfg.placements = parse_placements_json(read_text_file(o.placements_path));
  return cfg;
}

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + " with n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                      "; raise --cap or FLIPFORGE_CAP");
  }
}

PolygonFile load_polygon(const Options& o) {
  PolygonFile f;
  if (o.regular > 0) {
    f.polygon = regular_polygon(o.regular);
  } else if (!o.polygon_path.empty()) {
    f = parse_polygon_json(read_text_file(o.polygon_path));
  } else {
    throw InputError("give --polygon FILE or --regular N");
  }
  if (!o.puncture.empty()) f.puncture = Point2(parse_rational(o.puncture[0]), parse_rational(o.puncture[1]));
  return f;
}

struct Built {
  FlipGraph graph;
  std::vector<const ArcSystem*> systems;
  std::optional<Pointihedron> pointihedron;
  std::optional<GeomSystem> geom;
  std::optional<ArcSystem> topo;
};

Built build(const Options& o, const std::string& kind, const CertConfig& cfg) {
  Built b;
  if (kind == "tn" || kind == "an") {
    if (o.n < 1) throw InputError("--n must be a positive integer");
    if (kind == "tn") {
      require_cap(o.n, cfg.topo_cap, "T_n");
      b.topo = punctured_disk_system(o.n);
    } else {
      require_cap(o.n, cfg.assoc_cap, "A_n");
      b.topo = disk_system(o.n);
    }
    b.graph = build_system_graph(*b.topo).graph;
    b.systems = {&*b.topo};
    return b;
  }
  PolygonFile f = load_polygon(o);
  require_cap(f.polygon.size(), cfg.geom_cap, "polygon");
  if (kind == "pointihedron") {
    if (!f.puncture) throw InputError("the pointihedron needs a puncture");
    b.pointihedron = build_pointihedron(make_punctured(f.polygon, *f.puncture));
    b.graph = b.pointihedron->graph();
    b.systems = {&b.pointihedron->plain.system(), &b.pointihedron->punctured.system()};
    return b;
  }
  b.geom = f.puncture ? GeomSystem::punctured(make_punctured(f.polygon, *f.puncture)) : GeomSystem::plain(f.polygon);
  b.graph = build_system_graph(b.geom->system(), f.puncture ? Stratum::Punctured : Stratum::Plain).graph;
  b.systems = {&b.geom->system()};
  return b;
}

int resolve_label(const Built& b, const std::string& label) {
  if (auto id = b.graph.find(label)) return *id;
  std::string first_error;
  for (const ArcSystem* sys : b.systems) {
    try {
      std::string canonical = sys->label(sys->parse_label(label));
      if (auto id = b.graph.find(canonical)) return *id;
      throw InputError("'" + label + "' is not a triangulation of this instance");
    } catch (const InputError& e) {
      if (first_error.empty() || b.systems.size() == 1) first_error = e.what();
    }
  }
  throw InputError(first_error);
}

std::string summary(const Built& b, const Options& o) {
  std::ostringstream os;
  os << "vertices=" << b.graph.vertex_count() << " edges=" << b.graph.edge_count()
     << " diameter=" << diameter(b.graph, o.jobs).value;
  if (b.pointihedron) {
    os << " plain=" << b.pointihedron->stratum_vertices(Stratum::Plain).size()
       << " punctured=" << b.pointihedron->stratum_vertices(Stratum::Punctured).size()
       << " cross_edges=" << b.pointihedron->cross_edge_count();
  }
  return os.str() + "\n";
}

std::string render_graph(const Built& b, const Options& o) {
  if (o.format == "dot") return export_dot(b.graph);
  if (o.format == "json") return export_graph_json(b.graph);
  if (o.format == "csv") return export_graph_csv(b.graph);
  return summary(b, o);
}

std::string infer_graph(const Options& o) {
  if (!o.graph.empty()) return o.graph;
  if (o.n > 0) return "tn";
  return "fpstar";
}

int run_verify(const Options& o) {
  CertConfig cfg = config_of(o);
  std::vector<CertReport> reports = run_suite(o.suite, cfg);
  std::string text;
  for (const auto& r : reports) {
    text += (o.format == "json" ? r.to_json(o.timing).dump() : r.table_row()) + "\n";
  }
  emit(o, text);
  bool ok = true;
  for (const auto& r : reports) {
    if (r.evidence || r.pass) continue;
    ok = false;
    std::cerr << "FAIL " << r.claim << " " << r.instance.dump() << "\n  counterexample: " << r.witness.dump() << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flipforge: flip-graphs of punctured disks, polygons and pointihedra"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Size cap for topological and geometric instances")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", o.jobs, "Worker threads for all-pairs BFS")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv", "table"}));
  };
  auto polygon_opts = [&](CLI::App* sub) {
    sub->add_option("--polygon", o.polygon_path, "Polygon JSON file");
    sub->add_option("--regular", o.regular, "Use the rational regular N-gon")->check(CLI::Range(3, 64));
    sub->add_option("--puncture", o.puncture, "Puncture coordinates X Y (rationals)")->expected(2);
  };

  auto* tn = app.add_subcommand("tn", "Flip-graph of the once-punctured disk");
  tn->add_option("--n", o.n, "Number of boundary vertices")->required()->check(CLI::PositiveNumber);
  common(tn);
  auto* an = app.add_subcommand("an", "Flip-graph of the convex n-gon");
  an->add_option("--n", o.n, "Number of boundary vertices")->required()->check(CLI::Range(3, 64));
  common(an);
  auto* fpstar = app.add_subcommand("fpstar", "Flip-graph of a polygon, punctured when a puncture is given");
  polygon_opts(fpstar);
  common(fpstar);
  auto* pointi = app.add_subcommand("pointihedron", "Pointihedron flip-graph of a punctured polygon");
  polygon_opts(pointi);
  common(pointi);
  auto* dist = app.add_subcommand("distance", "Flip distance and a geodesic between two labels");
  dist->add_option("--from", o.from, "Source triangulation label")->required();
  dist->add_option("--to", o.to, "Target triangulation label")->required();
  dist->add_option("--n", o.n, "Use T_n (or A_n with --graph an)");
  dist->add_option("--graph", o.graph, "Graph kind")->check(CLI::IsMember({"tn", "an", "fpstar", "pointihedron"}));
  polygon_opts(dist);
  common(dist);
  auto* verify = app.add_subcommand("verify", "Run a certification suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--placements", o.placements_path, "JSON list of puncture placements");
  verify->add_flag("--timing", o.timing, "Include wall-clock durations in JSON reports");
  common(verify);
  auto* exp = app.add_subcommand("export", "Export a graph or its distance matrix");
  exp->add_option("--what", o.what, "graph or distances")->check(CLI::IsMember({"graph", "distances"}));
  exp->add_option("--n", o.n, "Use T_n (or A_n with --graph an)");
  exp->add_option("--graph", o.graph, "Graph kind")->check(CLI::IsMember({"tn", "an", "fpstar", "pointihedron"}));
  polygon_opts(exp);
  common(exp);
  auto* poly = app.add_subcommand("polygon", "Write a polygon file for the rational regular N-gon");
  poly->add_option("--regular", o.regular, "Number of vertices")->required()->check(CLI::Range(3, 64));
  poly->add_option("--puncture", o.puncture, "Puncture coordinates X Y (rationals)")->expected(2);
  poly->add_option("--out", o.out, "Write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(o);
    CertConfig cfg = config_of(o);
    if (*poly) {
      PolygonFile f = load_polygon(o);
      emit(o, polygon_json_text(f.polygon, f.puncture));
      return 0;
    }
    if (*tn || *an || *fpstar || *pointi) {
      std::string kind = *tn ? "tn" : *an ? "an" : *fpstar ? "fpstar" : "pointihedron";
      emit(o, render_graph(build(o, kind, cfg), o));
      return 0;
    }
    if (*dist) {
      Built b = build(o, infer_graph(o), cfg);
      int u = resolve_label(b, o.from);
      int v = resolve_label(b, o.to);
      FlipPath path = shortest_path(b.graph, u, v);
      annotate(b.graph, path);
      if (o.format == "json") {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& [rem, ins] : path.steps) steps.push_back({{"inserted", ins}, {"removed", rem}});
        nlohmann::json labels = nlohmann::json::array();
        for (int x : path.vertices) labels.push_back(b.graph.labels[x]);
        emit(o, nlohmann::json{{"distance", path.length()}, {"path", labels}, {"steps", steps}}.dump() + "\n");
      } else {
        std::string text = "distance=" + std::to_string(path.length()) + "\n";
        for (int x : path.vertices) text += "  " + b.graph.labels[x] + "\n";
        emit(o, text);
      }
      return 0;
    }
    if (*exp) {
      Built b = build(o, infer_graph(o), cfg);
      if (o.format == "table") throw InputError("export needs --format dot, json or csv");
      if (o.what == "distances") {
        if (o.format == "dot") throw InputError("distances export supports json or csv");
        emit(o, o.format == "json" ? export_distances_json(b.graph, o.jobs) : export_distances_csv(b.graph, o.jobs));
      } else {
        emit(o, render_graph(b, o));
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
