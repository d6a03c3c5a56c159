#pragma once

// Command implementations behind the vt20 binary. They are plain functions
// over streams so tests can drive them in-process; exit codes: 0 success,
// 1 verification failure, 2 usage or malformed input, 3 non-finite blow-up.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vt20/electrodynamics.hpp"
#include "vt20/generators.hpp"
#include "vt20/geodesic.hpp"
#include "vt20/group.hpp"

namespace vt20 {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  double k = 1.0;
  double q = 1.0;
  double m = 1.0;
  bool has_em = true;  // false: raw tensor field
  EMField em;
  Mat44 rawT;
  Vec4 x0{};
  Vec4 v0{{0.0, 0.0, 0.0, 1.0}};
  double step = 0.0;
  long n_steps = 0;
  Integrator integrator = Integrator::rk4;
};

// throws ConfigError on malformed JSON or invalid fields
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

// tensor field and a short description for reports
TField scenario_field(const ScenarioConfig& cfg, std::string* desc = nullptr);

// header tau,x1,x2,x3,x4,v1,v2,v3,v4; 17 significant digits, LF endings;
// written to a temp file first and renamed into place
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// throws ConfigError naming the offending data row
Trajectory read_trajectory_csv(const std::string& path);

// verification suites over an existing generator set (test hook for
// corrupted generators); prints a table naming the worst pair per suite
int run_verify(const GeneratorSet& g, std::ostream& out);

int cmd_verify(const MomentumConstants& c, std::ostream& out);
int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& out);
int cmd_scan_connection(const MomentumConstants& c, std::ostream& out);
int cmd_check_invariants(const std::string& traj_path, double tol, std::ostream& out);
int cmd_show_generator(int rho, int sigma, std::ostream& out);
int cmd_show_momentum(int mu, const MomentumConstants& c, std::ostream& out);
int cmd_show_translation(const Vec4& dx, const MomentumConstants& c, std::ostream& out);

}  // namespace vt20
