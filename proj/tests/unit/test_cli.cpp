// End-to-end checks of the yolkkit binary: exit codes, round trips, and
// byte-stable outputs. The binary path comes from the build system.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#ifndef YOLKKIT_CLI_PATH
#error "YOLKKIT_CLI_PATH must be defined by the build"
#endif

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

std::string temp_dir() {
  static int counter = 0;
  std::string dir = "/tmp/yolkkit_cli_scratch_" + std::to_string(getpid()) +
                    "_" + std::to_string(counter++);
  std::string cmd = "mkdir -p " + dir;
  REQUIRE(std::system(cmd.c_str()) == 0);
  return dir;
}

CmdResult run_cli(const std::string& args, const std::string& capture_path) {
  std::string cmd = std::string(YOLKKIT_CLI_PATH) + " " + args + " > " +
                    capture_path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  CmdResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(capture_path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate then compute reproduces the expected values") {
  std::string dir = temp_dir();
  CmdResult gen = run_cli("generate nondegen --eps 0.5 --out " + dir + "/nd.txt",
                          dir + "/gen.out");
  REQUIRE(gen.exit_code == 0);

  // Six data rows in the points file.
  std::string pts = slurp(dir + "/nd.txt");
  int rows = 0;
  std::istringstream lines(pts);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  CHECK(rows == 6);

  auto expected = nlohmann::json::parse(slurp(dir + "/nd.txt.expected.json"));
  CHECK(expected["family"] == "nondegen");

  CmdResult comp = run_cli("compute " + dir + "/nd.txt", dir + "/comp.json");
  REQUIRE(comp.exit_code == 0);
  auto doc = nlohmann::json::parse(comp.out);
  double want_lp = expected["expected"]["lp_radius"].get<double>();
  CHECK(std::abs(doc["lp_yolk"]["radius"].get<double>() - want_lp) < 1e-6);
  CHECK(std::abs(doc["yolk"]["radius"].get<double>() -
                 expected["expected"]["yolk_radius"].get<double>()) < 1e-5);
  CHECK(doc["limiting_count"].get<int>() ==
        expected["expected"]["limiting_count"].get<double>());
  CHECK(std::abs(doc["ratio"].get<double>() - want_lp) < 1e-5);
}

TEST_CASE("compute exit codes") {
  std::string dir = temp_dir();
  {
    std::ofstream bad(dir + "/bad.txt");
    bad << "1,2\nnope,4\n";
  }
  CHECK(run_cli("compute " + dir + "/bad.txt", dir + "/o1").exit_code == 2);
  CHECK(run_cli("compute " + dir + "/missing.txt", dir + "/o2").exit_code == 2);
  CHECK(run_cli("frobnicate", dir + "/o3").exit_code == 4);
  CHECK(run_cli("sweep --family oddr2ok --out " + dir + "/s.csv", dir + "/o4")
            .exit_code == 4);
  CHECK(run_cli("--help", dir + "/o5").exit_code == 0);
}

TEST_CASE("collinear points give a null ratio") {
  std::string dir = temp_dir();
  {
    std::ofstream f(dir + "/line.txt");
    f << "0,0\n1,0\n2,0\n";
  }
  CmdResult comp = run_cli("compute " + dir + "/line.txt", dir + "/line.json");
  REQUIRE(comp.exit_code == 0);
  auto doc = nlohmann::json::parse(comp.out);
  CHECK(doc["yolk"]["radius"].get<double>() < 1e-9);
  CHECK(doc["ratio"].is_null());
}

TEST_CASE("montecarlo is byte-stable for a fixed seed") {
  std::string dir = temp_dir();
  CmdResult a = run_cli(
      "montecarlo --n 5 --trials 12 --seed 99 --out " + dir + "/a.csv",
      dir + "/a.json");
  CmdResult b = run_cli(
      "montecarlo --n 5 --trials 12 --seed 99 --out " + dir + "/b.csv",
      dir + "/b.json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp(dir + "/a.csv") == slurp(dir + "/b.csv"));
  CHECK(a.out == b.out);
}

TEST_CASE("sweep csv and plot svg") {
  std::string dir = temp_dir();
  CmdResult sw = run_cli(
      "sweep --family oddr2ok --alpha 1.727875959 --kappa 1 --out " + dir +
          "/sweep.csv",
      dir + "/sw.out");
  REQUIRE(sw.exit_code == 0);
  std::string csv = slurp(dir + "/sweep.csv");
  CHECK(csv.find("lp_radius") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

  CmdResult gen = run_cli(
      "generate oddr2ok --alpha 1.727875959 --w 3 --eps 0.001 --out " + dir +
          "/ok.txt",
      dir + "/g.out");
  REQUIRE(gen.exit_code == 0);
  std::string pts = slurp(dir + "/ok.txt");
  int rows = 0;
  std::istringstream lines(pts);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  CHECK(rows == 5);

  CmdResult plot =
      run_cli("plot " + dir + "/ok.txt --out " + dir + "/ok.svg", dir + "/p.out");
  REQUIRE(plot.exit_code == 0);
  std::string svg = slurp(dir + "/ok.svg");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("certify reports the support set") {
  std::string dir = temp_dir();
  run_cli("generate nondegen --eps 0.5 --out " + dir + "/nd.txt", dir + "/g");
  CmdResult cert = run_cli("certify " + dir + "/nd.txt", dir + "/cert.json");
  REQUIRE(cert.exit_code == 0);
  auto doc = nlohmann::json::parse(cert.out);
  CHECK(doc["certificate"]["covered"] == true);
  CHECK(doc["support"].size() == 2);  // the two opposite vertical tangents
}

TEST_CASE("generate lift from a base file") {
  std::string dir = temp_dir();
  {
    std::ofstream f(dir + "/base.txt");
    f << "0,0\n1,0\n";
  }
  CmdResult gen = run_cli("generate lift --noise 0 --base " + dir +
                              "/base.txt --out " + dir + "/lift.txt",
                          dir + "/g");
  REQUIRE(gen.exit_code == 0);
  std::string pts = slurp(dir + "/lift.txt");
  CHECK(pts.find("0,0,0") != std::string::npos);
  CmdResult comp = run_cli("compute " + dir + "/lift.txt", dir + "/lift.json");
  REQUIRE(comp.exit_code == 0);
  auto doc = nlohmann::json::parse(comp.out);
  CHECK(doc["dimension"] == 3);
  CHECK(doc["lp_yolk"]["radius"].get<double>() < 1e-12);
  CHECK(doc["yolk"].is_null());
}
