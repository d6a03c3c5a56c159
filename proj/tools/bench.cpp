// serial vs parallel timing for the commutator scans and batch integration;
// the two paths must agree bitwise

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vt20/electrodynamics.hpp"
#include "vt20/geodesic.hpp"
#include "vt20/group.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
#endif
}

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now();
    f();
    best = std::min(best, now() - t0);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled, parallel path runs serially\n");
#endif

  const vt20::GeneratorSet g = vt20::build_generators(vt20::MomentumConstants::defaults(1.0));
  const int reps = quick ? 1 : 3;
  bool ok = true;

  std::printf("%-22s %12s %12s %10s\n", "kernel", "serial [s]", "parallel [s]", "match");

  {
    vt20::CommutatorReport rs, rp;
    const double ts = time_best_of(reps, [&] { rs = vt20::verify_jj_commutators(g, vt20::Exec::serial); });
    const double tp = time_best_of(reps, [&] { rp = vt20::verify_jj_commutators(g, vt20::Exec::parallel); });
    const bool match = rs.max_residual == rp.max_residual && rs.worst == rp.worst;
    ok = ok && match;
    std::printf("%-22s %12.6f %12.6f %10s\n", "jj-commutators", ts, tp, match ? "bitwise" : "MISMATCH");
  }
  {
    vt20::CommutatorReport rs, rp;
    const double ts = time_best_of(reps, [&] { rs = vt20::verify_pj_commutators(g, vt20::Exec::serial); });
    const double tp = time_best_of(reps, [&] { rp = vt20::verify_pj_commutators(g, vt20::Exec::parallel); });
    const bool match = rs.max_residual == rp.max_residual && rs.worst == rp.worst;
    ok = ok && match;
    std::printf("%-22s %12.6f %12.6f %10s\n", "pj-commutators", ts, tp, match ? "bitwise" : "MISMATCH");
  }
  {
    // batch of circular orbits in a constant magnetic field
    const long n_steps = quick ? 2000 : 20000;
    vt20::EMField em;
    em.B = {0.0, 0.0, 1.0};
    const vt20::Mat44 T = vt20::t_from_f(vt20::f_from_eb(em), 1.0, 1.0, 1.0);
    const vt20::TField field = [T](const vt20::Vec4&) { return T; };
    std::vector<vt20::State> starts;
    for (int i = 0; i < 64; ++i) {
      const double v = 0.1 + 0.01 * i;
      starts.push_back({{0, 0, 0, 0}, {v, 0, 0, std::sqrt(1.0 + v * v)}, 0.0});
    }
    std::vector<vt20::Trajectory> out_s, out_p;
    const double ts = time_best_of(reps, [&] {
      out_s = vt20::integrate_batch(starts, field, 1.0, 1e-3, n_steps, vt20::Integrator::rk4, vt20::Exec::serial);
    });
    const double tp = time_best_of(reps, [&] {
      out_p = vt20::integrate_batch(starts, field, 1.0, 1e-3, n_steps, vt20::Integrator::rk4, vt20::Exec::parallel);
    });
    bool match = out_s.size() == out_p.size();
    for (std::size_t i = 0; match && i < out_s.size(); ++i) {
      const auto& a = out_s[i].samples;
      const auto& b = out_p[i].samples;
      match = a.size() == b.size();
      for (std::size_t j = 0; match && j < a.size(); ++j)
        match = a[j].X == b[j].X && a[j].V == b[j].V && a[j].tau == b[j].tau;
    }
    ok = ok && match;
    std::printf("%-22s %12.6f %12.6f %10s\n", "integrate-batch(64)", ts, tp, match ? "bitwise" : "MISMATCH");
  }

  std::printf("%s\n", ok ? "all kernels agree bitwise" : "MISMATCH between serial and parallel kernels");
  return ok ? 0 : 1;
}
