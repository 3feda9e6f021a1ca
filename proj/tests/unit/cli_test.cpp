#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "smlab/cli/app.hpp"

namespace fs = std::filesystem;
using smlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("smlab-cli-" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("prove") {
  TempDir tmp;
  const auto all = call({"prove", "--report", tmp.file("r.json")});
  CHECK(all.code == 0);
  CHECK(all.out.find("thm1/d7.e11") != std::string::npos);
  CHECK(all.out.find("thm3/e2.identity") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(tmp.file("r.json")));
  CHECK(doc["passed"] == true);
  CHECK(doc["reports"].size() == 3);

  const auto only2 = call({"prove", "--theorem", "2", "--report", ""});
  CHECK(only2.code == 0);
  CHECK(only2.out.find("thm2/") != std::string::npos);
  CHECK(only2.out.find("thm1/") == std::string::npos);

  CHECK(call({"prove", "--theorem", "9"}).code == 2);
  CHECK(call({"prove", "--bogus"}).code == 2);
}

TEST_CASE("prove report is byte-deterministic") {
  TempDir tmp;
  REQUIRE(call({"prove", "--theorem", "1", "--quiet", "--report", tmp.file("a.json")}).code == 0);
  REQUIRE(call({"prove", "--theorem", "1", "--quiet", "--report", tmp.file("b.json")}).code == 0);
  CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));
  REQUIRE(call({"prove", "--theorem", "3", "--quiet", "--timing", "--report", tmp.file("t.json")}).code == 0);
  CHECK(nlohmann::json::parse(slurp(tmp.file("t.json")))["reports"][0].contains("wall_time_s"));
}

TEST_CASE("residual") {
  TempDir tmp;
  const std::string json = "--json=" + tmp.file("g.json");
  CHECK(call({"residual", "--patch", "sphere", "--r", "1", "--alpha", "-2", "--expect-pass", json}).code == 0);
  CHECK(call({"residual", "--patch", "sphere", "--r", "1", "--alpha", "-1", "--expect-pass", json}).code == 1);
  CHECK(call({"residual", "--patch", "sphere", "--r", "1", "--alpha", "-1", json}).code == 0);
  CHECK(call({"residual", "--patch", "plane", "--alpha", "3.7", "--expect-pass", json}).code == 0);
  CHECK(call({"residual", "--patch", "cylinder", "--alpha", "-1", "--expect-pass", json}).code == 0);
  CHECK(call({"residual", "--patch", "cylinder", "--alpha", "1", "--expect-pass", json}).code == 1);
  CHECK(nlohmann::json::parse(slurp(tmp.file("g.json")))["patch"] == "cylinder");

  CHECK(call({"residual", "--patch", "torus", "--alpha", "1", json}).code == 2);
  CHECK(call({"residual", "--patch", "sphere", json}).code == 2);
  CHECK(call({"residual", "--patch", "sphere", "--r", "-1", "--alpha", "1", json}).code == 2);
  CHECK(call({"residual", "--patch", "sphere", "--alpha", "1", "--a", "0,0", json}).code == 2);
  // a sphere entirely below the boundary plane has no valid sample
  CHECK(call({"residual", "--patch", "sphere", "--center", "0,0,-5", "--alpha", "1", json}).code == 2);
}

TEST_CASE("residual outputs match between serial and parallel evaluation") {
  TempDir tmp;
  for (const char* mode : {"p", "s"}) {
    std::vector<std::string> args{"residual", "--patch", "sphere", "--alpha", "-1.5", "--nu", "17", "--nv", "11",
                                  "--json", tmp.file(std::string(mode) + ".json"), "--csv",
                                  tmp.file(std::string(mode) + ".csv")};
    if (mode[0] == 's') args.push_back("--serial");
    REQUIRE(call(args).code == 0);
  }
  CHECK(slurp(tmp.file("p.csv")) == slurp(tmp.file("s.csv")));
  CHECK(slurp(tmp.file("p.json")) == slurp(tmp.file("s.json")));
}

TEST_CASE("catenary") {
  TempDir tmp;
  const auto r = call({"catenary", "--alpha", "1", "--y0", "1", "--smax", "2", "--csv", tmp.file("c.csv"), "--json",
                       tmp.file("c.json")});
  CHECK(r.code == 0);
  std::ifstream csv(tmp.file("c.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "s,x,y,theta,J");
  CHECK(nlohmann::json::parse(slurp(tmp.file("c.json")))["termination"] == "reached-smax");

  CHECK(call({"catenary", "--alpha", "-1", "--y0", "1", "--csv", tmp.file("o.csv"), "--json", ""}).code == 0);
  CHECK(call({"catenary", "--alpha", "0", "--csv", "", "--json", ""}).code == 2);
  CHECK(call({"catenary", "--alpha", "1", "--step", "0", "--csv", "", "--json", ""}).code == 2);
  CHECK(call({"catenary", "--alpha", "1", "--y0", "-1", "--csv", "", "--json", ""}).code == 2);
}

TEST_CASE("extrude") {
  TempDir tmp;
  const std::string obj = "--obj=" + tmp.file("m.obj"), json = "--json=" + tmp.file("e.json");
  CHECK(call({"extrude", "--alpha", "-1", "--y0", "1", "--expect-pass", obj, json}).code == 0);
  const auto report = nlohmann::json::parse(slurp(tmp.file("e.json")));
  CHECK(report["max_abs_K"].get<double>() < 1e-10);
  CHECK(report["patch"] == "extrusion");
  const std::string mesh = slurp(tmp.file("m.obj"));
  CHECK(std::count(mesh.begin(), mesh.end(), 'v') == 200 * 20);
  CHECK(std::count(mesh.begin(), mesh.end(), 'f') == 2 * 199 * 19);

  CHECK(call({"extrude", "--alpha", "1", "--y0", "1", "--expect-pass", obj, json}).code == 0);
  CHECK(call({"extrude", "--alpha", "1", "--v", "0,0,1", "--a", "0,0,1", obj, json}).code == 2);

  REQUIRE(call({"catenary", "--alpha", "-1", "--smax", "1", "--csv", tmp.file("t.csv"), "--json", ""}).code == 0);
  CHECK(call({"extrude", "--alpha", "-1", "--trajectory", tmp.file("t.csv"), "--expect-pass", obj, json}).code == 0);
  CHECK(call({"extrude", "--alpha", "-1", "--trajectory", tmp.file("missing.csv"), obj, json}).code == 2);
}

TEST_CASE("curvature") {
  TempDir tmp;
  REQUIRE(call({"curvature", "--patch", "sphere", "--r", "2", "--csv", tmp.file("s.csv")}).code == 0);
  std::ifstream csv(tmp.file("s.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "u,v,E,F,G,L,M,N,H,K,k1,k2,fd_deviation");
  int rows = 0;
  while (std::getline(csv, line)) {
    std::vector<double> cols;
    std::stringstream fields(line);
    std::string item;
    while (std::getline(fields, item, ',')) cols.push_back(item.empty() ? 0 : std::stod(item));
    CHECK(std::abs(std::abs(cols[8]) - 1) < 1e-12);
    CHECK(std::abs(cols[9] - 0.25) < 1e-12);
    ++rows;
  }
  CHECK(rows == 400);

  auto max_dev = [&](const char* h) {
    const auto r = call({"curvature", "--patch", "cylinder", "--fd-h", h, "--csv", ""});
    REQUIRE(r.code == 0);
    return std::stod(r.out.substr(r.out.rfind(' ') + 1));
  };
  const double ratio = max_dev("1e-3") / max_dev("5e-4");
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
  CHECK(call({"curvature", "--patch", "cylinder", "--axis", "0,0,0", "--csv", ""}).code == 2);
}

TEST_CASE("config file") {
  TempDir tmp;
  {
    std::ofstream cfg(tmp.file("ok.cfg"));
    cfg << "# sphere centered on the boundary plane\npatch = sphere\nalpha = -2\njson =\n";
  }
  CHECK(call({"residual", "--config", tmp.file("ok.cfg"), "--expect-pass"}).code == 0);
  CHECK(call({"residual", "--config", tmp.file("ok.cfg"), "--alpha", "-1", "--expect-pass"}).code == 1);
  CHECK(call({"residual", "--config=" + tmp.file("ok.cfg"), "--expect-pass"}).code == 0);
  {
    std::ofstream cfg(tmp.file("flag.cfg"));
    cfg << "patch = sphere\nalpha = -1\nexpect-pass = true\njson =\n";
  }
  CHECK(call({"residual", "--config", tmp.file("flag.cfg")}).code == 1);
  CHECK(call({"residual", "--config", tmp.file("flag.cfg"), "--alpha", "-2"}).code == 0);
  {
    std::ofstream cfg(tmp.file("bad.cfg"));
    cfg << "patch = sphere\nradius = 2\n";
  }
  const auto bad = call({"residual", "--config", tmp.file("bad.cfg"), "--alpha", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("radius") != std::string::npos);
  {
    std::ofstream cfg(tmp.file("noeq.cfg"));
    cfg << "patch sphere\n";
  }
  CHECK(call({"residual", "--config", tmp.file("noeq.cfg"), "--alpha", "1"}).code == 2);
  CHECK(call({"residual", "--config", tmp.file("absent.cfg"), "--alpha", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
