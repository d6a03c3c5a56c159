#include "vt20/group.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace vt20 {

namespace {

double lower(const Vec4& dx, int sigma) { return metric(sigma, sigma) * dx[static_cast<std::size_t>(sigma - 1)]; }

std::string pair_label(const char* kind, int a, int b, int c, int d) {
  char buf[64];
  if (kind[0] == 'J')
    std::snprintf(buf, sizeof buf, "[J(%d,%d), J(%d,%d)]", a, b, c, d);
  else
    std::snprintf(buf, sizeof buf, "[P(%d), J(%d,%d)]", a, c, d);
  return buf;
}

}  // namespace

RepMatrix translation_matrix(const Vec4& dx, const GeneratorSet& g) {
  RepMatrix m = RepMatrix::identity();
  for (int sigma = 1; sigma <= 4; ++sigma) {
    const cplx coef = -iunit * lower(dx, sigma);
    const CMat20& p = g.P(sigma);
    for (int r = 0; r < 4; ++r)
      for (int c = 4; c < 20; ++c) m(r, c) += coef * p(r, c);
  }
  return m;
}

RepMatrix lorentz_matrix(const Mat44& omega, const GeneratorSet& g) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (omega(r, c) != -omega(c, r)) throw std::domain_error("lorentz_matrix: omega must be antisymmetric");
  CMat20 arg;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      const double w = omega(mu - 1, nu - 1);
      if (w == 0.0) continue;
      const cplx coef = iunit * (0.5 * w);
      const CMat20& jm = g.J(mu, nu);
      for (std::size_t i = 0; i < arg.a.size(); ++i) arg.a[i] += coef * jm.a[i];
    }
  return expm<20>(arg);
}

RepMatrix rep_matrix(const PoincareElement& e, const GeneratorSet& g) {
  return translation_matrix(e.dx, g) * lorentz_matrix(e.omega, g);
}

Mat44 rotation_z(double theta) {
  // w_{12} = -theta gives the block [[cos,-sin],[sin,cos]] on components 1,2
  Mat44 w;
  w(0, 1) = -theta;
  w(1, 0) = theta;
  return w;
}

Mat44 boost_z(double phi) {
  Mat44 w;
  w(2, 3) = phi;
  w(3, 2) = -phi;
  return w;
}

Mat44 real_vector_block(const RepMatrix& m) {
  Mat44 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const cplx v = m(r, c);
      if (std::abs(v.imag()) > 1e-13)
        throw std::runtime_error("real_vector_block: entry has a non-negligible imaginary part");
      out(r, c) = v.real();
    }
  return out;
}

double eta_preservation_residual(const Mat44& lambda) {
  const Mat44 eta = eta44();
  return max_abs_diff(transpose(lambda) * eta * lambda, eta);
}

namespace {

// Residual tables are filled independently per combination (parallelizable),
// then reduced serially so the report does not depend on scheduling.
CommutatorReport reduce(const std::vector<double>& residuals, const std::vector<std::string>& labels) {
  CommutatorReport rep;
  rep.combos = static_cast<int>(residuals.size());
  int argmax = 0;
  for (int i = 0; i < rep.combos; ++i)
    if (residuals[static_cast<std::size_t>(i)] > residuals[static_cast<std::size_t>(argmax)]) argmax = i;
  rep.max_residual = residuals[static_cast<std::size_t>(argmax)];
  rep.worst = labels[static_cast<std::size_t>(argmax)];
  return rep;
}

double jj_residual(const GeneratorSet& g, int mu, int nu, int rho, int sigma) {
  const CMat20 lhs = g.J(mu, nu) * g.J(rho, sigma) - g.J(rho, sigma) * g.J(mu, nu);
  CMat20 rhs;
  const double c1 = metric(mu, rho), c2 = metric(mu, sigma), c3 = metric(nu, rho), c4 = metric(nu, sigma);
  const CMat20 &a = g.J(nu, sigma), &b = g.J(nu, rho), &c = g.J(mu, sigma), &d = g.J(mu, rho);
  for (std::size_t i = 0; i < rhs.a.size(); ++i)
    rhs.a[i] = iunit * (c1 * a.a[i] - c2 * b.a[i] - c3 * c.a[i] + c4 * d.a[i]);
  return max_abs_diff(lhs, rhs);
}

double pj_residual(const GeneratorSet& g, int mu, int rho, int sigma) {
  const CMat20 lhs = g.P(mu) * g.J(rho, sigma) - g.J(rho, sigma) * g.P(mu);
  CMat20 rhs;
  const double c1 = metric(mu, rho), c2 = metric(mu, sigma);
  const CMat20 &a = g.P(sigma), &b = g.P(rho);
  for (std::size_t i = 0; i < rhs.a.size(); ++i) rhs.a[i] = -iunit * (c1 * a.a[i] - c2 * b.a[i]);
  return max_abs_diff(lhs, rhs);
}

}  // namespace

CommutatorReport verify_jj_commutators(const GeneratorSet& g, Exec ex) {
  constexpr int n = 256;
  std::vector<double> residuals(n);
  std::vector<std::string> labels(n);
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      const int mu = 1 + (i >> 6 & 3), nu = 1 + (i >> 4 & 3), rho = 1 + (i >> 2 & 3), sigma = 1 + (i & 3);
      residuals[static_cast<std::size_t>(i)] = jj_residual(g, mu, nu, rho, sigma);
      labels[static_cast<std::size_t>(i)] = pair_label("J", mu, nu, rho, sigma);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const int mu = 1 + (i >> 6 & 3), nu = 1 + (i >> 4 & 3), rho = 1 + (i >> 2 & 3), sigma = 1 + (i & 3);
      residuals[static_cast<std::size_t>(i)] = jj_residual(g, mu, nu, rho, sigma);
      labels[static_cast<std::size_t>(i)] = pair_label("J", mu, nu, rho, sigma);
    }
  }
  return reduce(residuals, labels);
}

CommutatorReport verify_pj_commutators(const GeneratorSet& g, Exec ex) {
  constexpr int n = 64;
  std::vector<double> residuals(n);
  std::vector<std::string> labels(n);
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      const int mu = 1 + (i >> 4 & 3), rho = 1 + (i >> 2 & 3), sigma = 1 + (i & 3);
      residuals[static_cast<std::size_t>(i)] = pj_residual(g, mu, rho, sigma);
      labels[static_cast<std::size_t>(i)] = pair_label("P", mu, 0, rho, sigma);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const int mu = 1 + (i >> 4 & 3), rho = 1 + (i >> 2 & 3), sigma = 1 + (i & 3);
      residuals[static_cast<std::size_t>(i)] = pj_residual(g, mu, rho, sigma);
      labels[static_cast<std::size_t>(i)] = pair_label("P", mu, 0, rho, sigma);
    }
  }
  return reduce(residuals, labels);
}

CommutatorReport verify_pp_commutators(const GeneratorSet& g) {
  std::vector<double> residuals;
  std::vector<std::string> labels;
  for (int mu = 1; mu <= 4; ++mu)
    for (int rho = 1; rho <= 4; ++rho) {
      const CMat20 lhs = g.P(mu) * g.P(rho) - g.P(rho) * g.P(mu);
      residuals.push_back(max_abs(lhs));
      char buf[32];
      std::snprintf(buf, sizeof buf, "[P(%d), P(%d)]", mu, rho);
      labels.emplace_back(buf);
    }
  return reduce(residuals, labels);
}

double nilpotency_residual(const GeneratorSet& g) {
  double mx = 0.0;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) mx = std::max(mx, max_abs(g.P(mu) * g.P(nu)));
  return mx;
}

}  // namespace vt20
