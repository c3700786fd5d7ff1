#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FLIPFORGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("tn summary") {
  Run r = run("tn --n 3");
  CHECK(r.status == 0);
  CHECK(r.out == "vertices=10 edges=12 diameter=4\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("tn --n 3 --bogus").status == 2);
  CHECK(run("tn --n 3 --format xml").status == 2);
  CHECK(run("verify nosuchsuite").status == 2);
  CHECK(run("distance --n 3 --from \"R 1,R 2,R 3\" --to \"R 1,R 2,C 9 9\"").status == 2);
}

TEST_CASE("cap refusal exits 1") {
  CHECK(run("tn --n 6 --cap 5").status == 1);
}

TEST_CASE("verify diam-tn") {
  Run r = run("verify diam-tn --cap 5");
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(r.out.find("FAIL") == std::string::npos);
  Run j = run("verify diam-tn --cap 3 --format json");
  CHECK(j.out.rfind("{\"claim\":\"thm-diam-Tn\"", 0) == 0);
  CHECK(j.out == run("verify diam-tn --cap 3 --format json --jobs 3").out);
}

TEST_CASE("failing verification exits 1") {
  CHECK(run("verify projection --cap 4").status == 1);
}

TEST_CASE("dot export of A_6") {
  std::string path = std::string(FLIPFORGE_TMP) + "/a6.dot";
  Run r = run("an --n 6 --format dot --out " + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::string dot = slurp(path);
  int vertices = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("\"D ") != std::string::npos && line.find(" -- ") == std::string::npos) ++vertices;
  }
  CHECK(vertices == 14);
}

TEST_CASE("polygon files and geometric commands") {
  std::string path = std::string(FLIPFORGE_TMP) + "/square.json";
  {
    std::ofstream f(path);
    f << R"({"vertices": [["0","0"], ["2","0"], ["2","2"], ["0","2"]], "puncture": ["1/2", "1/3"]})";
  }
  Run fp = run("fpstar --polygon " + path);
  CHECK(fp.status == 0);
  CHECK(fp.out.rfind("vertices=", 0) == 0);
  Run pt = run("pointihedron --polygon " + path);
  CHECK(pt.status == 0);
  CHECK(pt.out.find("plain=2") != std::string::npos);
  Run d = run("distance --polygon " + path + " --graph pointihedron --from \"D 1 3\" --to \"D 2 4\"");
  CHECK(d.status == 0);
  CHECK(d.out.rfind("distance=", 0) == 0);
  Run e = run("export --polygon " + path + " --graph pointihedron --what distances --format csv");
  CHECK(e.status == 0);
  CHECK(e.out.rfind("source,", 0) == 0);
  Run g = run("polygon --regular 5 --puncture 0 0");
  CHECK(g.status == 0);
  CHECK(g.out.find("\"puncture\": [") != std::string::npos);
  CHECK(run("fpstar --polygon /nonexistent.json").status == 2);
}
