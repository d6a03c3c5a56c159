#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "vt20/cli.hpp"

using namespace vt20;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("vt20_cli_" + name); }

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kGoodConfig = R"({
  "k": 1.0, "q": 1.0, "m": 1.0,
  "field": {"b": [0.0, 0.0, 1.0]},
  "x0": [0.0, 0.0, 0.0, 0.0],
  "v0": [0.3, 0.0, 0.0],
  "step": 0.001, "n_steps": 200,
  "integrator": "rk4"
})";

}  // namespace

TEST_CASE("parse_scenario accepts a full config and promotes the 3-velocity") {
  const ScenarioConfig cfg = parse_scenario(kGoodConfig);
  CHECK(cfg.k == 1.0);
  CHECK(cfg.has_em);
  CHECK(cfg.em.B[2] == 1.0);
  CHECK(cfg.em.E[0] == 0.0);
  CHECK(cfg.n_steps == 200);
  CHECK(cfg.integrator == Integrator::rk4);
  CHECK(cfg.v0[3] > 1.0);  // gamma
  CHECK(norm_eta(cfg.v0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("parse_scenario: 4-velocity passes through, integrator defaults to rk4") {
  const ScenarioConfig cfg = parse_scenario(R"({
    "k": 2.0, "q": -1.0, "m": 0.5,
    "field": {"e": [0.1, 0.0, 0.0]},
    "x0": [1.0, 2.0, 3.0, 4.0],
    "v0": [0.0, 0.0, 0.0, 1.0],
    "step": 0.01, "n_steps": 5
  })");
  CHECK(cfg.v0 == Vec4{0.0, 0.0, 0.0, 1.0});
  CHECK(cfg.integrator == Integrator::rk4);
  CHECK(cfg.em.B[0] == 0.0);
}

TEST_CASE("parse_scenario accepts a raw tensor field") {
  const ScenarioConfig cfg = parse_scenario(R"({
    "k": 1.0, "q": 1.0, "m": 1.0,
    "field": {"t": [[0,1,0,0],[-1,0,0,0],[0,0,0,0],[0,0,0,0]]},
    "x0": [0,0,0,0], "v0": [0,0,0,1], "step": 0.1, "n_steps": 2
  })");
  CHECK(!cfg.has_em);
  CHECK(cfg.rawT(0, 1) == 1.0);
  CHECK(cfg.rawT(1, 0) == -1.0);
}

TEST_CASE("parse_scenario rejects malformed input with a clear message") {
  auto rejects = [](const std::string& text, const std::string& needle) {
    try {
      parse_scenario(text);
      FAIL_CHECK("expected ConfigError for: " << needle);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  rejects("{not json", "malformed JSON");
  rejects(R"([1,2,3])", "top level");
  rejects(R"({"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
          "\"k\"");
  rejects(R"({"k":1,"q":1,"m":0,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
          "\"m\"");
  rejects(R"({"k":1,"q":1,"m":1,"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})", "field");
  rejects(
      R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1],"t":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
      "not both");
  rejects(R"({"k":1,"q":1,"m":1,"field":{},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
          "field");
  rejects(R"({"k":0,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
          "nonzero");
  rejects(R"({"k":1,"q":1,"m":1,"field":{"b":[0,0]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
          "3 numbers");
  rejects(R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1})",
          "4 numbers");
  rejects(R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0.99,0.99,0],"step":0.1,"n_steps":1})",
          "|u| < 1");
  rejects(R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0,"n_steps":1})",
          "\"step\"");
  rejects(R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":0})",
          "n_steps");
  rejects(R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":2.5})",
          "n_steps");
  rejects(
      R"({"k":1,"q":1,"m":1,"field":{"b":[0,0,1]},"x0":[0,0,0,0],"v0":[0,0,0,1],"step":0.1,"n_steps":1,"integrator":"leapfrog"})",
      "integrator");
}

TEST_CASE("load_scenario reports unreadable paths") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/dir/config.json"), ConfigError);
}

TEST_CASE("trajectory CSV round trip is exact") {
  Trajectory tr;
  tr.samples.push_back({{0.1, -0.2, 0.3, 0.4}, {1.0 / 3.0, 0.0, -2.0 / 7.0, 1.1}, 0.0});
  tr.samples.push_back({{1e-17, 2e300, -3e-300, 4.0}, {0.5, 0.25, 0.125, 1.0}, 0.001});
  const fs::path p = temp_file("roundtrip.csv");
  write_trajectory_csv(p.string(), tr);

  const std::string text = read_text(p);
  CHECK(text.rfind("tau,x1,x2,x3,x4,v1,v2,v3,v4\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');

  const Trajectory back = read_trajectory_csv(p.string());
  REQUIRE(back.samples.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.samples[i].X == tr.samples[i].X);
    CHECK(back.samples[i].V == tr.samples[i].V);
    CHECK(back.samples[i].tau == tr.samples[i].tau);
  }
  fs::remove(p);
}

TEST_CASE("trajectory CSV reader names the offending row") {
  const fs::path p = temp_file("bad.csv");

  write_text(p, "tau,x1,x2\n");
  CHECK_THROWS_AS(read_trajectory_csv(p.string()), ConfigError);

  write_text(p, "tau,x1,x2,x3,x4,v1,v2,v3,v4\n0,0,0,0,0,0,0,0,1\n0,bad,0,0,0,0,0,0,1\n");
  try {
    read_trajectory_csv(p.string());
    FAIL_CHECK("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }

  write_text(p, "tau,x1,x2,x3,x4,v1,v2,v3,v4\n0,1,2,3\n");
  CHECK_THROWS_AS(read_trajectory_csv(p.string()), ConfigError);

  write_text(p, "tau,x1,x2,x3,x4,v1,v2,v3,v4\n0,0,0,0,0,0,0,0,1,9\n");
  CHECK_THROWS_AS(read_trajectory_csv(p.string()), ConfigError);

  write_text(p, "tau,x1,x2,x3,x4,v1,v2,v3,v4\n");
  CHECK_THROWS_AS(read_trajectory_csv(p.string()), ConfigError);

  fs::remove(p);
}

TEST_CASE("verify command: clean pass, and corruption flips the exit code") {
  std::ostringstream out;
  CHECK(cmd_verify(MomentumConstants::defaults(1.0), out) == 0);
  CHECK(out.str().find("overall: PASS") != std::string::npos);

  GeneratorSet g = build_generators(MomentumConstants::defaults(1.0));
  g.J(2, 3)(5, 6) += cplx(0.0, 1e-4);
  std::ostringstream bad;
  CHECK(run_verify(g, bad) == 1);
  CHECK(bad.str().find("overall: FAIL") != std::string::npos);
  CHECK(bad.str().find("worst [") != std::string::npos);
}

TEST_CASE("simulate command writes the trajectory and reports the run") {
  const fs::path cfg = temp_file("sim.json");
  const fs::path out_csv = temp_file("sim.csv");
  write_text(cfg, kGoodConfig);

  std::ostringstream out;
  CHECK(cmd_simulate(cfg.string(), out_csv.string(), out) == 0);
  CHECK(fs::exists(out_csv));
  const Trajectory tr = read_trajectory_csv(out_csv.string());
  CHECK(tr.samples.size() == 201);
  CHECK(out.str().find("norm eta V.V") != std::string::npos);
  CHECK(out.str().find("closed-form check") != std::string::npos);
  CHECK(out.str().find("wrote") != std::string::npos);
  // antisymmetric field: no drift warning
  CHECK(out.str().find("warning") == std::string::npos);

  fs::remove(cfg);
  fs::remove(out_csv);
}

TEST_CASE("simulate command warns when the tensor has a symmetric part") {
  const fs::path cfg = temp_file("sym.json");
  const fs::path out_csv = temp_file("sym.csv");
  write_text(cfg, R"({
    "k": 1.0, "q": 1.0, "m": 1.0,
    "field": {"t": [[0.01,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]},
    "x0": [0,0,0,0], "v0": [0.1, 0, 0], "step": 0.01, "n_steps": 10
  })");
  std::ostringstream out;
  CHECK(cmd_simulate(cfg.string(), out_csv.string(), out) == 0);
  CHECK(out.str().find("warning: connection tensor not antisymmetric") != std::string::npos);
  fs::remove(cfg);
  fs::remove(out_csv);
}

TEST_CASE("simulate command exit codes: bad input 2, blow-up 3") {
  const fs::path out_csv = temp_file("never.csv");
  std::ostringstream out;
  CHECK(cmd_simulate("/nonexistent/cfg.json", out_csv.string(), out) == 2);

  const fs::path cfg = temp_file("broken.json");
  write_text(cfg, "{\"k\": }");
  std::ostringstream out2;
  CHECK(cmd_simulate(cfg.string(), out_csv.string(), out2) == 2);
  CHECK(!fs::exists(out_csv));

  write_text(cfg, R"({
    "k": 1.0, "q": 1.0, "m": 1.0,
    "field": {"t": [[0,0,0,0],[0,0,0,0],[0,0,1e6,0],[0,0,0,0]]},
    "x0": [0,0,0,0], "v0": [0, 0, 0.1], "step": 0.1, "n_steps": 100000
  })");
  std::ostringstream out3;
  CHECK(cmd_simulate(cfg.string(), out_csv.string(), out3) == 3);
  CHECK(out3.str().find("last good tau") != std::string::npos);
  CHECK(!fs::exists(out_csv));
  CHECK(!fs::exists(out_csv.string() + ".tmp"));

  fs::remove(cfg);
}

TEST_CASE("check-invariants command: pass, fail, unreadable") {
  const fs::path cfg = temp_file("chk.json");
  const fs::path csv = temp_file("chk.csv");
  write_text(cfg, kGoodConfig);
  std::ostringstream sim;
  REQUIRE(cmd_simulate(cfg.string(), csv.string(), sim) == 0);

  std::ostringstream ok;
  CHECK(cmd_check_invariants(csv.string(), 1e-9, ok) == 0);
  CHECK(ok.str().find("status: PASS") != std::string::npos);

  // tamper with one velocity entry
  Trajectory tr = read_trajectory_csv(csv.string());
  tr.samples[tr.samples.size() / 2].V[0] += 0.01;
  write_trajectory_csv(csv.string(), tr);
  std::ostringstream bad;
  CHECK(cmd_check_invariants(csv.string(), 1e-9, bad) == 1);
  CHECK(bad.str().find("status: FAIL") != std::string::npos);

  std::ostringstream missing;
  CHECK(cmd_check_invariants("/nonexistent/t.csv", 1e-9, missing) == 2);

  fs::remove(cfg);
  fs::remove(csv);
}

TEST_CASE("scan-connection and show commands run cleanly") {
  std::ostringstream scan;
  MomentumConstants c;
  c.c1 = 0.0;
  c.c2 = 0.4;
  c.c3 = -0.4;
  c.c4 = 0.0;
  CHECK(cmd_scan_connection(c, scan) == 0);
  CHECK(scan.str().find("classification: neither") != std::string::npos);
  CHECK(scan.str().find("k = 2 c2") != std::string::npos);

  MomentumConstants sym;
  sym.c1 = 1.0;
  sym.c2 = 2.0;
  sym.c3 = 0.0;
  sym.c4 = 0.0;
  std::ostringstream scan2;
  CHECK(cmd_scan_connection(sym, scan2) == 0);
  CHECK(scan2.str().find("classification: symmetric") != std::string::npos);

  std::ostringstream gen;
  CHECK(cmd_show_generator(1, 2, gen) == 0);
  CHECK(gen.str().find("J(1,2)") != std::string::npos);

  std::ostringstream mom;
  CHECK(cmd_show_momentum(1, MomentumConstants::defaults(1.0), mom) == 0);
  CHECK(mom.str().find("P(1)") != std::string::npos);

  std::ostringstream tr;
  CHECK(cmd_show_translation({0.3, -0.2, 0.5, 0.7}, MomentumConstants::defaults(1.0), tr) == 0);
  CHECK(tr.str().find("0.3") != std::string::npos);
}
