#include "vt20/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "vt20/field.hpp"
#include "vt20/indexing.hpp"

namespace vt20 {

namespace {

using nlohmann::json;

double get_number(const json& j, const char* name) {
  if (!j.contains(name)) throw ConfigError(std::string("config: missing field \"") + name + "\"");
  const json& v = j.at(name);
  if (!v.is_number()) throw ConfigError(std::string("config: field \"") + name + "\" must be a number");
  return v.get<double>();
}

std::array<double, 3> get_vec3(const json& v, const char* name) {
  if (!v.is_array() || v.size() != 3)
    throw ConfigError(std::string("config: field \"") + name + "\" must be an array of 3 numbers");
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (!v[static_cast<std::size_t>(i)].is_number())
      throw ConfigError(std::string("config: field \"") + name + "\" must contain numbers");
    out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)].get<double>();
  }
  return out;
}

Vec4 get_vec4(const json& v, const char* name) {
  if (!v.is_array() || v.size() != 4)
    throw ConfigError(std::string("config: field \"") + name + "\" must be an array of 4 numbers");
  Vec4 out{};
  for (int i = 0; i < 4; ++i) {
    if (!v[static_cast<std::size_t>(i)].is_number())
      throw ConfigError(std::string("config: field \"") + name + "\" must contain numbers");
    out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)].get<double>();
  }
  return out;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

  ScenarioConfig cfg;
  cfg.k = get_number(j, "k");
  cfg.q = get_number(j, "q");
  cfg.m = get_number(j, "m");
  if (cfg.m <= 0.0) throw ConfigError("config: field \"m\" must be positive");

  if (!j.contains("field") || !j.at("field").is_object())
    throw ConfigError("config: missing object field \"field\"");
  const json& f = j.at("field");
  const bool has_eb = f.contains("e") || f.contains("b");
  const bool has_t = f.contains("t");
  if (has_eb == has_t)
    throw ConfigError("config: \"field\" must carry either \"e\"/\"b\" 3-vectors or a \"t\" 4x4 array, not both");
  if (has_eb) {
    cfg.has_em = true;
    if (f.contains("e")) cfg.em.E = get_vec3(f.at("e"), "field.e");
    if (f.contains("b")) cfg.em.B = get_vec3(f.at("b"), "field.b");
    if (cfg.k == 0.0) throw ConfigError("config: field \"k\" must be nonzero for e/b field configs");
  } else {
    cfg.has_em = false;
    const json& t = f.at("t");
    if (!t.is_array() || t.size() != 4)
      throw ConfigError("config: field \"field.t\" must be an array of 4 rows");
    for (int r = 0; r < 4; ++r) {
      const Vec4 row = get_vec4(t[static_cast<std::size_t>(r)], "field.t row");
      for (int c = 0; c < 4; ++c) cfg.rawT(r, c) = row[static_cast<std::size_t>(c)];
    }
  }

  if (!j.contains("x0")) throw ConfigError("config: missing field \"x0\"");
  cfg.x0 = get_vec4(j.at("x0"), "x0");

  if (!j.contains("v0")) throw ConfigError("config: missing field \"v0\"");
  const json& v0 = j.at("v0");
  if (v0.is_array() && v0.size() == 3) {
    const auto u = get_vec3(v0, "v0");
    try {
      cfg.v0 = promote_velocity(u);
    } catch (const std::domain_error&) {
      throw ConfigError("config: 3-velocity \"v0\" must have |u| < 1");
    }
  } else {
    cfg.v0 = get_vec4(v0, "v0");
  }

  cfg.step = get_number(j, "step");
  if (cfg.step <= 0.0) throw ConfigError("config: field \"step\" must be positive");
  const double n = get_number(j, "n_steps");
  if (n < 1 || n != std::floor(n)) throw ConfigError("config: field \"n_steps\" must be a positive integer");
  cfg.n_steps = static_cast<long>(n);

  if (j.contains("integrator")) {
    const json& integ = j.at("integrator");
    if (!integ.is_string()) throw ConfigError("config: field \"integrator\" must be \"rk4\" or \"euler\"");
    const std::string s = integ.get<std::string>();
    if (s == "rk4")
      cfg.integrator = Integrator::rk4;
    else if (s == "euler")
      cfg.integrator = Integrator::euler;
    else
      throw ConfigError("config: field \"integrator\" must be \"rk4\" or \"euler\"");
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

TField scenario_field(const ScenarioConfig& cfg, std::string* desc) {
  Mat44 T;
  if (cfg.has_em) {
    T = t_from_f(f_from_eb(cfg.em), cfg.q, cfg.m, cfg.k);
    if (desc) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "e=(%g,%g,%g) b=(%g,%g,%g)", cfg.em.E[0], cfg.em.E[1], cfg.em.E[2],
                    cfg.em.B[0], cfg.em.B[1], cfg.em.B[2]);
      *desc = buf;
    }
  } else {
    T = cfg.rawT;
    if (desc) *desc = "raw tensor";
  }
  return [T](const Vec4&) { return T; };
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ConfigError("csv: cannot open " + tmp + " for writing");
    out << "tau,x1,x2,x3,x4,v1,v2,v3,v4\n";
    char buf[32];
    for (const State& s : traj.samples) {
      const double cols[9] = {s.tau, s.X[0], s.X[1], s.X[2], s.X[3], s.V[0], s.V[1], s.V[2], s.V[3]};
      for (int i = 0; i < 9; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", cols[i]);
        out << buf << (i == 8 ? '\n' : ',');
      }
    }
    if (!out) throw ConfigError("csv: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("csv: empty file " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "tau,x1,x2,x3,x4,v1,v2,v3,v4")
    throw ConfigError("csv: unexpected header \"" + line + "\"");

  Trajectory traj;
  long row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double vals[9];
    const char* p = line.c_str();
    for (int i = 0; i < 9; ++i) {
      char* end = nullptr;
      vals[i] = std::strtod(p, &end);
      if (end == p) throw ConfigError("csv: data row " + std::to_string(row) + ": malformed number");
      p = end;
      if (i < 8) {
        if (*p != ',') throw ConfigError("csv: data row " + std::to_string(row) + ": expected 9 comma-separated fields");
        ++p;
      }
    }
    if (*p != '\0') throw ConfigError("csv: data row " + std::to_string(row) + ": trailing characters");
    traj.samples.push_back(
        {{vals[1], vals[2], vals[3], vals[4]}, {vals[5], vals[6], vals[7], vals[8]}, vals[0]});
  }
  if (traj.samples.empty()) throw ConfigError("csv: no data rows in " + path);
  if (traj.samples.size() > 1) traj.step = traj.samples[1].tau - traj.samples[0].tau;
  return traj;
}

namespace {

struct SuiteLine {
  const char* name;
  double residual;
  double tol;
  bool exact;
  std::string worst;
};

void print_suite(std::ostream& out, const SuiteLine& s, bool pass) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%-26s residual %-12.5g tol %-8.3g %s", s.name, s.residual, s.tol,
                pass ? "pass" : "FAIL");
  out << buf;
  if (!s.worst.empty()) out << "  worst " << s.worst;
  out << '\n';
}

}  // namespace

int run_verify(const GeneratorSet& g, std::ostream& out) {
  const MomentumConstants& c = g.constants;
  char head[160];
  std::snprintf(head, sizeof head, "constants: c1=%g c2=%g c3=%g c4=%g k=%g\n", c.c1, c.c2, c.c3, c.c4, c.k);
  out << head;

  std::vector<SuiteLine> lines;
  const CommutatorReport jj = verify_jj_commutators(g, Exec::parallel);
  lines.push_back({"jj-commutators", jj.max_residual, 1e-13, false, jj.worst});
  const CommutatorReport pj = verify_pj_commutators(g, Exec::parallel);
  lines.push_back({"pj-commutators", pj.max_residual, 1e-13, false, pj.worst});
  const CommutatorReport pp = verify_pp_commutators(g);
  lines.push_back({"pp-commutators", pp.max_residual, 0.0, true, pp.worst});
  lines.push_back({"nilpotency", nilpotency_residual(g), 0.0, true, ""});

  // translation subgroup: D(a) D(b) = D(a+b)
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 32; ++t) {
      Vec4 a, b;
      for (int i = 0; i < 4; ++i) {
        a[static_cast<std::size_t>(i)] = dist(rng);
        b[static_cast<std::size_t>(i)] = dist(rng);
      }
      worst = std::max(worst, max_abs_diff(translation_matrix(a, g) * translation_matrix(b, g),
                                           translation_matrix(add(a, b), g)));
    }
    lines.push_back({"translation-compose", worst, 1e-15, false, ""});
  }

  // eta preservation of the finite vector block over rotations, boosts, and
  // mixed parameters
  {
    double worst = 0.0;
    for (int i = 1; i <= 31; ++i)
      worst = std::max(worst, eta_preservation_residual(real_vector_block(lorentz_matrix(rotation_z(0.1 * i), g))));
    for (int i = 0; i <= 20; ++i)
      worst = std::max(worst, eta_preservation_residual(real_vector_block(lorentz_matrix(boost_z(0.1 * i), g))));
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    for (int t = 0; t < 3; ++t) {
      Mat44 w;
      for (int r = 0; r < 4; ++r)
        for (int col = r + 1; col < 4; ++col) {
          const double v = dist(rng);
          w(r, col) = v;
          w(col, r) = -v;
        }
      worst = std::max(worst, eta_preservation_residual(real_vector_block(lorentz_matrix(w, g))));
    }
    lines.push_back({"lorentz-eta-preservation", worst, 1e-12, false, ""});
  }

  bool all_pass = true;
  for (const SuiteLine& s : lines) {
    const bool pass = s.exact ? s.residual == 0.0 : s.residual <= s.tol;
    all_pass = all_pass && pass;
    print_suite(out, s, pass);
  }
  out << "overall: " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? 0 : 1;
}

int cmd_verify(const MomentumConstants& c, std::ostream& out) {
  return run_verify(build_generators(c), out);
}

namespace {

void print_vec4(std::ostream& out, const char* label, const Vec4& v) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (%.12g, %.12g, %.12g, %.12g)\n", label, v[0], v[1], v[2], v[3]);
  out << buf;
}

// closed-form comparison when the scenario is a recognizable constant-field
// case; returns false when no closed form applies
bool closed_form_deviation(const ScenarioConfig& cfg, const Trajectory& traj, double* max_dx, const char** label) {
  const bool zero_field = cfg.has_em ? (cfg.em.E == std::array<double, 3>{} && cfg.em.B == std::array<double, 3>{})
                                     : max_abs(cfg.rawT) == 0.0;
  if (zero_field) {
    double mx = 0.0;
    for (const State& s : traj.samples) {
      const Vec4 ref = add(cfg.x0, scale(cfg.v0, s.tau - traj.samples.front().tau));
      mx = std::max(mx, max_abs(sub(s.X, ref)));
    }
    *max_dx = mx;
    *label = "zero field, straight worldline";
    return true;
  }
  if (!cfg.has_em) return false;
  const bool b_case = cfg.em.E == std::array<double, 3>{} && cfg.em.B[0] == 0.0 && cfg.em.B[1] == 0.0 &&
                      cfg.em.B[2] != 0.0 && cfg.v0[2] == 0.0 && cfg.q != 0.0;
  const bool e_case = cfg.em.B == std::array<double, 3>{} && cfg.em.E[0] == 0.0 && cfg.em.E[1] == 0.0 &&
                      cfg.v0[0] == 0.0 && cfg.v0[1] == 0.0;
  if (!b_case && !e_case) return false;
  const ChargedParticle particle{cfg.q, cfg.m, cfg.x0, cfg.v0};
  double mx = 0.0;
  for (const State& s : traj.samples) {
    const double tau = s.tau - traj.samples.front().tau;
    const State ref =
        b_case ? constant_b_orbit(particle, cfg.em.B[2], tau) : constant_e_orbit(particle, cfg.em.E[2], tau);
    mx = std::max(mx, std::max(max_abs(sub(s.X, ref.X)), max_abs(sub(s.V, ref.V))));
  }
  *max_dx = mx;
  *label = b_case ? "constant Bz orbit" : "constant Ez orbit";
  return true;
}

}  // namespace

int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& out) {
  ScenarioConfig cfg;
  try {
    cfg = load_scenario(config_path);
  } catch (const ConfigError& e) {
    out << "error: " << e.what() << '\n';
    return 2;
  }

  std::string desc;
  const TField field = scenario_field(cfg, &desc);
  char buf[220];
  std::snprintf(buf, sizeof buf, "field: %s\nintegrator: %s, step %g, %ld steps, k=%g q=%g m=%g\n", desc.c_str(),
                to_string(cfg.integrator), cfg.step, cfg.n_steps, cfg.k, cfg.q, cfg.m);
  out << buf;

  // a symmetric part in the connection tensor breaks norm conservation
  const Mat44 T0 = field(cfg.x0);
  Mat44 sym;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) sym(r, c) = 0.5 * (T0(r, c) + T0(c, r));
  if (max_abs(sym) > 0.0) {
    const double rate = norm_rate({cfg.x0, cfg.v0, 0.0}, field, cfg.k);
    std::snprintf(buf, sizeof buf,
                  "warning: connection tensor not antisymmetric; tangent norm will drift (initial rate %.6g)\n",
                  rate);
    out << buf;
  }

  Trajectory traj;
  try {
    traj = integrate({cfg.x0, cfg.v0, 0.0}, field, cfg.k, cfg.step, cfg.n_steps, cfg.integrator);
  } catch (const BlowupError& e) {
    out << "error: " << e.what() << '\n';
    return 3;
  }
  traj.field_desc = desc;

  print_vec4(out, "initial X:", traj.samples.front().X);
  print_vec4(out, "initial V:", traj.samples.front().V);
  print_vec4(out, "final   X:", traj.samples.back().X);
  print_vec4(out, "final   V:", traj.samples.back().V);
  std::snprintf(buf, sizeof buf, "norm eta V.V: initial %.12g, max drift %.6g\n",
                norm_eta(traj.samples.front().V), norm_drift(traj));
  out << buf;

  double dev = 0.0;
  const char* label = nullptr;
  if (closed_form_deviation(cfg, traj, &dev, &label)) {
    std::snprintf(buf, sizeof buf, "closed-form check (%s): max deviation %.6g\n", label, dev);
    out << buf;
  }

  try {
    write_trajectory_csv(out_path, traj);
  } catch (const ConfigError& e) {
    out << "error: " << e.what() << '\n';
    return 2;
  }
  out << "wrote " << out_path << " (" << traj.samples.size() << " rows)\n";
  return 0;
}

int cmd_scan_connection(const MomentumConstants& c, std::ostream& out) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "constants: c1=%g c2=%g c3=%g c4=%g\n", c.c1, c.c2, c.c3, c.c4);
  out << buf;
  out << "classification: " << to_string(classify_connection_symmetry(c)) << '\n';
  if (c.c1 == 0.0 && c.c4 == 0.0 && c.c2 != 0.0 && c.c2 == -c.c3) {
    std::snprintf(buf, sizeof buf,
                  "form: gamma_sigma^nu = %g * eta_{rho sigma} T^{rho nu}  (k T with the first index lowered, "
                  "k = 2 c2)\n",
                  2.0 * c.c2);
    out << buf;
  } else if (c.c3 == 0.0 && c.c4 == 0.0 && c.c1 != 0.0 && c.c1 == -c.c2) {
    std::snprintf(buf, sizeof buf, "form: gamma^{mu nu} = %g * tr_eta(T) * eta^{mu nu}  (eta times the eta-trace)\n",
                  -2.0 * c.c1);
    out << buf;
  }
  out << "basis images gamma_sigma^nu (row sigma, column nu):\n";
  const auto& order = tensor_order();
  for (int s = 0; s < kTensorSlots; ++s) {
    const auto [a, b] = order[static_cast<std::size_t>(s)];
    Mat44 basis;
    basis(a - 1, b - 1) = 1.0;
    const Mat44 gamma = connection(basis, c);
    out << "T^{" << a << b << "}:\n";
    for (int r = 0; r < 4; ++r) {
      std::snprintf(buf, sizeof buf, "  %12.6g %12.6g %12.6g %12.6g\n", gamma(r, 0), gamma(r, 1), gamma(r, 2),
                    gamma(r, 3));
      out << buf;
    }
  }
  return 0;
}

int cmd_check_invariants(const std::string& traj_path, double tol, std::ostream& out) {
  Trajectory traj;
  try {
    traj = read_trajectory_csv(traj_path);
  } catch (const ConfigError& e) {
    out << "error: " << e.what() << '\n';
    return 2;
  }
  const double n0 = norm_eta(traj.samples.front().V);
  double drift = 0.0;
  std::size_t worst_row = 0;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const double d = std::abs(norm_eta(traj.samples[i].V) - n0);
    if (d > drift) {
      drift = d;
      worst_row = i;
    }
  }
  bool uniform = true;
  double step = traj.step;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const double dt = traj.samples[i].tau - traj.samples[i - 1].tau;
    if (std::abs(dt - step) > std::max(1e-12, 1e-9 * std::abs(step))) uniform = false;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "rows: %zu\nstep: %.12g (uniform spacing: %s)\ninitial eta V.V: %.12g\n",
                traj.samples.size(), step, uniform ? "yes" : "NO", n0);
  out << buf;
  std::snprintf(buf, sizeof buf, "max |eta V.V - initial|: %.6g at data row %zu\ntolerance: %g\n", drift,
                worst_row + 1, tol);
  out << buf;
  const bool pass = uniform && drift <= tol;
  out << "status: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

namespace {

std::string fmt_cplx(cplx z) {
  char buf[64];
  if (z.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  else if (z.real() == 0.0)
    std::snprintf(buf, sizeof buf, "%.12gi", z.imag());
  else
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

void print_cmat20(std::ostream& out, const CMat20& m) {
  for (int r = 0; r < 20; ++r) {
    for (int c = 0; c < 20; ++c) out << (c ? " " : "") << fmt_cplx(m(r, c));
    out << '\n';
  }
}

}  // namespace

int cmd_show_generator(int rho, int sigma, std::ostream& out) {
  const GeneratorSet g = build_generators(MomentumConstants::defaults(1.0));
  out << "J(" << rho << "," << sigma << "), 20x20, row-major:\n";
  print_cmat20(out, g.J(rho, sigma));
  return 0;
}

int cmd_show_momentum(int mu, const MomentumConstants& c, std::ostream& out) {
  const GeneratorSet g = build_generators(c);
  out << "P(" << mu << "), 20x20, row-major:\n";
  print_cmat20(out, g.P(mu));
  return 0;
}

int cmd_show_translation(const Vec4& dx, const MomentumConstants& c, std::ostream& out) {
  const GeneratorSet g = build_generators(c);
  char buf[120];
  std::snprintf(buf, sizeof buf, "D(1, dx) for dx = (%g, %g, %g, %g), 20x20, row-major:\n", dx[0], dx[1], dx[2],
                dx[3]);
  out << buf;
  print_cmat20(out, translation_matrix(dx, g));
  return 0;
}

}  // namespace vt20
