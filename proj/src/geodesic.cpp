#include "vt20/geodesic.hpp"

#include <cmath>
#include <cstdio>
#include <exception>

#include "vt20/field.hpp"
#include "vt20/group.hpp"
#include "vt20/indexing.hpp"

namespace vt20 {

const char* to_string(Integrator m) { return m == Integrator::rk4 ? "rk4" : "euler"; }

namespace {

std::string blowup_message(double tau, long nstep) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "non-finite state during integration; last good tau = %.17g (step %ld)", tau, nstep);
  return buf;
}

bool finite4(const Vec4& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]) && std::isfinite(v[3]);
}

Vec4 lowered(const Vec4& v) { return {v[0], v[1], v[2], -v[3]}; }

// dV^mu = k T^{rho mu} V_rho
Vec4 accel(const Mat44& T, const Vec4& V, double k) {
  const Vec4 vl = lowered(V);
  Vec4 out{};
  for (int mu = 0; mu < 4; ++mu) {
    double acc = 0.0;
    for (int rho = 0; rho < 4; ++rho) acc += T(rho, mu) * vl[static_cast<std::size_t>(rho)];
    out[static_cast<std::size_t>(mu)] = k * acc;
  }
  return out;
}

}  // namespace

BlowupError::BlowupError(double tau, long nstep)
    : std::runtime_error(blowup_message(tau, nstep)), last_good_tau(tau), last_good_step(nstep) {}

std::pair<Vec4, Vec4> geodesic_rhs(const State& s, const TField& T, double k) {
  return {s.V, accel(T(s.X), s.V, k)};
}

Trajectory integrate(const State& s0, const TField& T, double k, double step, long n_steps, Integrator method) {
  if (step <= 0.0) throw std::domain_error("integrate: step must be positive");
  if (n_steps < 1) throw std::domain_error("integrate: n_steps must be at least 1");
  if (!finite4(s0.X) || !finite4(s0.V)) throw BlowupError(s0.tau, 0);

  Trajectory traj;
  traj.step = step;
  traj.method = method;
  traj.samples.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.samples.push_back(s0);

  Vec4 X = s0.X, V = s0.V;
  for (long i = 0; i < n_steps; ++i) {
    if (method == Integrator::rk4) {
      const Vec4 k1x = V, k1v = accel(T(X), V, k);
      const Vec4 x2 = add(X, scale(k1x, step / 2)), v2 = add(V, scale(k1v, step / 2));
      const Vec4 k2x = v2, k2v = accel(T(x2), v2, k);
      const Vec4 x3 = add(X, scale(k2x, step / 2)), v3 = add(V, scale(k2v, step / 2));
      const Vec4 k3x = v3, k3v = accel(T(x3), v3, k);
      const Vec4 x4 = add(X, scale(k3x, step)), v4 = add(V, scale(k3v, step));
      const Vec4 k4x = v4, k4v = accel(T(x4), v4, k);
      X = add(X, scale(add(add(k1x, scale(add(k2x, k3x), 2.0)), k4x), step / 6));
      V = add(V, scale(add(add(k1v, scale(add(k2v, k3v), 2.0)), k4v), step / 6));
    } else {
      const Vec4 a = accel(T(X), V, k);
      X = add(X, scale(V, step));
      V = add(V, scale(a, step));
    }
    if (!finite4(X) || !finite4(V)) throw BlowupError(traj.samples.back().tau, i);
    traj.samples.push_back({X, V, s0.tau + static_cast<double>(i + 1) * step});
  }
  return traj;
}

std::vector<Trajectory> integrate_batch(const std::vector<State>& s0, const TField& T, double k, double step,
                                        long n_steps, Integrator method, Exec ex) {
  const long n = static_cast<long>(s0.size());
  std::vector<Trajectory> out(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = integrate(s0[static_cast<std::size_t>(i)], T, k, step, n_steps, method);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = integrate(s0[static_cast<std::size_t>(i)], T, k, step, n_steps, method);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Vec4 parallel_transport_step(const State& s, const TField& T, double k, double dtau) {
  return add(s.V, scale(accel(T(s.X), s.V, k), dtau));
}

Vec4 parallel_transport_step_matrix(const State& s, const TField& T, double k, double dtau, const GeneratorSet& g) {
  (void)k;  // the coupling lives inside g.constants
  const Psi20 psi{s.V, T(s.X)};
  const std::array<double, 20> flat = flatten(psi);
  const RepMatrix back = translation_matrix(scale(s.V, -dtau), g);
  // exact inverse: (I + N)^{-1} = I - N for the nilpotent translation block
  RepMatrix inv = RepMatrix::identity();
  inv *= cplx(2.0, 0.0);
  inv -= back;
  Vec4 out{};
  for (int r = 0; r < 4; ++r) {
    cplx acc(0.0, 0.0);
    for (int c = 0; c < 20; ++c) acc += inv(r, c) * flat[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc.real();
  }
  return out;
}

double norm_eta(const Vec4& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - v[3] * v[3]; }

double norm_drift(const Trajectory& t) {
  if (t.samples.empty()) throw std::domain_error("norm_drift: empty trajectory");
  const double n0 = norm_eta(t.samples.front().V);
  double mx = 0.0;
  for (const State& s : t.samples) mx = std::max(mx, std::abs(norm_eta(s.V) - n0));
  return mx;
}

double norm_rate(const State& s, const TField& T, double k) {
  const Mat44 Tx = T(s.X);
  const Vec4 vl = lowered(s.V);
  double acc = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int b = 0; b < 4; ++b) acc += vl[static_cast<std::size_t>(r)] * vl[static_cast<std::size_t>(b)] * Tx(r, b);
  return 2.0 * k * acc;
}

std::vector<Vec4> timelike_samples(int n) {
  std::vector<Vec4> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double az = i * golden;
    const double phi = 0.25 + 1.75 * (n > 1 ? static_cast<double>(i) / (n - 1) : 0.0);
    const double sh = std::sinh(phi);
    out.push_back({sh * r * std::cos(az), sh * r * std::sin(az), sh * z, std::cosh(phi)});
  }
  return out;
}

AntisymmetryReport check_antisymmetry_necessity(const Mat44& T, double k, const std::vector<Vec4>& velocities,
                                                double tol) {
  (void)k;  // the contraction test is k-independent; k only scales the rate
  static constexpr int kPairs = 10;
  static constexpr int pair_a[kPairs] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3};
  static constexpr int pair_b[kPairs] = {0, 1, 2, 3, 1, 2, 3, 2, 3, 3};

  const long n = static_cast<long>(velocities.size());
  AntisymmetryReport rep;
  Mat44 sym;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) sym(r, c) = 0.5 * (T(r, c) + T(c, r));
  rep.symmetric_norm = max_abs(sym);

  // rows of the design matrix: coefficient of S_{ab} in V_rho V_beta S^{rho beta}
  std::vector<std::array<double, kPairs>> rows(static_cast<std::size_t>(n));
  std::vector<double> y(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const Vec4& v = velocities[static_cast<std::size_t>(i)];
    const Vec4 vl = {v[0], v[1], v[2], -v[3]};
    for (int j = 0; j < kPairs; ++j) {
      const int a = pair_a[j], b = pair_b[j];
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          vl[static_cast<std::size_t>(a)] * vl[static_cast<std::size_t>(b)] * (a == b ? 1.0 : 2.0);
    }
    double contraction = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        contraction += vl[static_cast<std::size_t>(r)] * vl[static_cast<std::size_t>(c)] * sym(r, c);
    y[static_cast<std::size_t>(i)] = contraction;
    rep.max_contraction = std::max(rep.max_contraction, std::abs(contraction));
  }

  // normal equations for the 10 symmetric degrees of freedom
  Mat<double, kPairs, kPairs> ata;
  std::array<double, kPairs> aty{};
  for (long i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (int r = 0; r < kPairs; ++r) {
      for (int c = 0; c < kPairs; ++c)
        ata(r, c) += row[static_cast<std::size_t>(r)] * row[static_cast<std::size_t>(c)];
      aty[static_cast<std::size_t>(r)] += row[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(i)];
    }
  }

  Lu<double, kPairs> f;
  try {
    f = lu_decompose<double, kPairs>(ata);
  } catch (const std::runtime_error&) {
    throw std::runtime_error("check_antisymmetry_necessity: sample velocities are rank-deficient "
                             "for the 10 symmetric components");
  }
  if (f.min_pivot < 1e-12 * f.max_pivot)
    throw std::runtime_error("check_antisymmetry_necessity: sample velocities are rank-deficient "
                             "for the 10 symmetric components");

  const auto x = lu_solve<double, kPairs>(f, aty);
  for (int j = 0; j < kPairs; ++j) {
    const int a = pair_a[j], b = pair_b[j];
    rep.recovered_symmetric(a, b) = x[static_cast<std::size_t>(j)];
    rep.recovered_symmetric(b, a) = x[static_cast<std::size_t>(j)];
  }
  rep.recovery_residual = max_abs_diff(rep.recovered_symmetric, sym);
  rep.all_vanish = rep.max_contraction <= tol;
  return rep;
}

GeodesicProblem reparametrize(const GeodesicProblem& p, double c0, double c1) {
  if (c1 == 0.0) throw std::domain_error("reparametrize: c1 must be nonzero");
  GeodesicProblem out = p;
  out.k = c1 * p.k;
  out.step = p.step / c1;
  out.s0.V = scale(p.s0.V, c1);
  out.s0.tau = (p.s0.tau - c0) / c1;
  return out;
}

}  // namespace vt20
