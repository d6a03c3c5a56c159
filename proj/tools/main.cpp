#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vt20/cli.hpp"

namespace {

// --k picks the default constants for that k; explicit --c flags then
// override individual entries
vt20::MomentumConstants resolve_constants(double k, const CLI::Option* k_opt, double c1, const CLI::Option* c1_opt,
                                          double c2, const CLI::Option* c2_opt, double c3, const CLI::Option* c3_opt,
                                          double c4, const CLI::Option* c4_opt) {
  vt20::MomentumConstants c = vt20::MomentumConstants::defaults(k_opt->count() ? k : 1.0);
  if (c1_opt->count()) c.c1 = c1;
  if (c2_opt->count()) c.c2 = c2;
  if (c3_opt->count()) c.c3 = c3;
  if (c4_opt->count()) c.c4 = c4;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"20-component vector plus tensor representation of spacetime symmetries:\n"
               "generator construction, algebra verification, and worldline integration"};
  app.require_subcommand(1);

  double k = 1.0, c1 = 0.0, c2 = 0.5, c3 = -0.5, c4 = 0.0;

  // verify algebra
  CLI::App* verify = app.add_subcommand("verify", "check the commutation relations and group properties");
  verify->require_subcommand(1);
  CLI::App* algebra = verify->add_subcommand("algebra", "verify all commutators against the structure constants");
  auto* va_k = algebra->add_option("--k", k, "momentum scale; sets c2 = k/2, c3 = -k/2 unless overridden");
  auto* va_c1 = algebra->add_option("--c1", c1, "momentum constant c1");
  auto* va_c2 = algebra->add_option("--c2", c2, "momentum constant c2");
  auto* va_c3 = algebra->add_option("--c3", c3, "momentum constant c3");
  auto* va_c4 = algebra->add_option("--c4", c4, "momentum constant c4");

  // simulate
  CLI::App* simulate = app.add_subcommand("simulate", "integrate a charged-particle worldline from a JSON config");
  std::string config_path, out_path;
  simulate->add_option("--config", config_path, "JSON scenario file")->required();
  simulate->add_option("--out", out_path, "output trajectory CSV")->required();

  // scan-connection
  CLI::App* scan = app.add_subcommand("scan-connection", "classify the connection tensor for given constants");
  auto* sc_c1 = scan->add_option("--c1", c1, "momentum constant c1")->required();
  auto* sc_c2 = scan->add_option("--c2", c2, "momentum constant c2")->required();
  auto* sc_c3 = scan->add_option("--c3", c3, "momentum constant c3")->required();
  auto* sc_c4 = scan->add_option("--c4", c4, "momentum constant c4")->required();
  (void)sc_c1;
  (void)sc_c2;
  (void)sc_c3;
  (void)sc_c4;

  // check-invariants
  CLI::App* check = app.add_subcommand("check-invariants", "check norm conservation along a trajectory CSV");
  std::string traj_path;
  double tol = 1e-9;
  check->add_option("--traj", traj_path, "trajectory CSV file")->required();
  check->add_option("--tol", tol, "allowed |eta V.V| drift (default 1e-9)");

  // show
  CLI::App* show = app.add_subcommand("show", "print a generator or group element matrix");
  show->require_subcommand(1);
  CLI::App* show_gen = show->add_subcommand("generator", "print J(rho, sigma)");
  int rho = 1, sigma = 2;
  show_gen->add_option("--rho", rho, "first index, 1..4")->required()->check(CLI::Range(1, 4));
  show_gen->add_option("--sigma", sigma, "second index, 1..4")->required()->check(CLI::Range(1, 4));
  CLI::App* show_mom = show->add_subcommand("momentum", "print P(mu)");
  int mu = 1;
  show_mom->add_option("--mu", mu, "index, 1..4")->required()->check(CLI::Range(1, 4));
  auto* sm_k = show_mom->add_option("--k", k, "momentum scale");
  auto* sm_c1 = show_mom->add_option("--c1", c1, "momentum constant c1");
  auto* sm_c2 = show_mom->add_option("--c2", c2, "momentum constant c2");
  auto* sm_c3 = show_mom->add_option("--c3", c3, "momentum constant c3");
  auto* sm_c4 = show_mom->add_option("--c4", c4, "momentum constant c4");

  std::vector<double> dx;
  CLI::App* show_tr = show->add_subcommand("translation-matrix", "print D(1, dx)");
  auto* st_dx = show_tr->add_option("--dx", dx, "displacement x,y,z,t")->required()->delimiter(',')->expected(4);
  auto* st_k = show_tr->add_option("--k", k, "momentum scale");

  // top-level alias for the translation matrix
  CLI::App* top_tr = app.add_subcommand("translation-matrix", "print D(1, dx)");
  auto* tt_dx = top_tr->add_option("--dx", dx, "displacement x,y,z,t")->required()->delimiter(',')->expected(4);
  auto* tt_k = top_tr->add_option("--k", k, "momentum scale");
  (void)st_dx;
  (void)tt_dx;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (algebra->parsed()) {
      const vt20::MomentumConstants c =
          resolve_constants(k, va_k, c1, va_c1, c2, va_c2, c3, va_c3, c4, va_c4);
      return vt20::cmd_verify(c, std::cout);
    }
    if (simulate->parsed()) return vt20::cmd_simulate(config_path, out_path, std::cout);
    if (scan->parsed()) {
      vt20::MomentumConstants c;
      c.c1 = c1;
      c.c2 = c2;
      c.c3 = c3;
      c.c4 = c4;
      return vt20::cmd_scan_connection(c, std::cout);
    }
    if (check->parsed()) return vt20::cmd_check_invariants(traj_path, tol, std::cout);
    if (show_gen->parsed()) return vt20::cmd_show_generator(rho, sigma, std::cout);
    if (show_mom->parsed()) {
      const vt20::MomentumConstants c =
          resolve_constants(k, sm_k, c1, sm_c1, c2, sm_c2, c3, sm_c3, c4, sm_c4);
      return vt20::cmd_show_momentum(mu, c, std::cout);
    }
    if (show_tr->parsed() || top_tr->parsed()) {
      const CLI::Option* k_opt = show_tr->parsed() ? st_k : tt_k;
      const vt20::MomentumConstants c = vt20::MomentumConstants::defaults(k_opt->count() ? k : 1.0);
      return vt20::cmd_show_translation({dx[0], dx[1], dx[2], dx[3]}, c, std::cout);
    }
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
