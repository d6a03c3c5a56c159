#include "vt20/generators.hpp"

#include <stdexcept>

namespace vt20 {

namespace {

double kdelta(int a, int b) { return a == b ? 1.0 : 0.0; }

void check_index(int v) {
  if (v < 1 || v > 4) throw std::domain_error("tensor index out of range 1..4");
}

}  // namespace

CMat4 j11_block(int rho, int sigma) {
  check_index(rho);
  check_index(sigma);
  CMat4 m;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu)
      m(mu - 1, nu - 1) = iunit * (metric(sigma, mu) * kdelta(rho, nu) - metric(rho, mu) * kdelta(sigma, nu));
  return m;
}

CMat16 j22_block(int rho, int sigma) {
  check_index(rho);
  check_index(sigma);
  const auto& order = tensor_order();
  CMat16 m;
  for (int gi = 0; gi < kTensorSlots; ++gi) {
    const auto [g, d] = order[static_cast<std::size_t>(gi)];
    for (int ei = 0; ei < kTensorSlots; ++ei) {
      const auto [e, x] = order[static_cast<std::size_t>(ei)];
      m(gi, ei) = -iunit * (metric(rho, g) * kdelta(sigma, e) * kdelta(d, x) -
                            metric(sigma, g) * kdelta(rho, e) * kdelta(d, x) +
                            metric(rho, d) * kdelta(sigma, x) * kdelta(g, e) -
                            metric(sigma, d) * kdelta(rho, x) * kdelta(g, e));
    }
  }
  return m;
}

Mat<cplx, 4, 16> p12_block(int mu, const MomentumConstants& c) {
  check_index(mu);
  const auto& order = tensor_order();
  Mat<cplx, 4, 16> m;
  for (int nu = 1; nu <= 4; ++nu) {
    for (int ci = 0; ci < kTensorSlots; ++ci) {
      const auto [a, b] = order[static_cast<std::size_t>(ci)];
      // eta is diagonal, so the eps term collapses to sigma = mu, rho = nu
      const double eps_term = metric(mu, mu) * metric(nu, nu) * epsilon(mu, nu, a, b);
      m(nu - 1, ci) = iunit * ((c.c1 + c.c2 - c.c3) * kdelta(mu, a) * kdelta(nu, b) +
                               (c.c1 + c.c2 + c.c3) * kdelta(mu, b) * kdelta(nu, a) -
                               2.0 * c.c1 * metric(mu, nu) * metric(a, b) + c.c4 * eps_term);
    }
  }
  return m;
}

const CMat20& GeneratorSet::J(int rho, int sigma) const {
  check_index(rho);
  check_index(sigma);
  return j[static_cast<std::size_t>((rho - 1) * 4 + (sigma - 1))];
}

CMat20& GeneratorSet::J(int rho, int sigma) {
  check_index(rho);
  check_index(sigma);
  return j[static_cast<std::size_t>((rho - 1) * 4 + (sigma - 1))];
}

const CMat20& GeneratorSet::P(int mu) const {
  check_index(mu);
  return p[static_cast<std::size_t>(mu - 1)];
}

CMat20& GeneratorSet::P(int mu) {
  check_index(mu);
  return p[static_cast<std::size_t>(mu - 1)];
}

GeneratorSet build_generators(const MomentumConstants& c) {
  GeneratorSet g;
  g.constants = c;
  for (int rho = 1; rho <= 4; ++rho)
    for (int sigma = 1; sigma <= 4; ++sigma) {
      const CMat4 v = j11_block(rho, sigma);
      const CMat16 t = j22_block(rho, sigma);
      CMat20& out = g.J(rho, sigma);
      for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) out(r, col) = v(r, col);
      for (int r = 0; r < 16; ++r)
        for (int col = 0; col < 16; ++col) out(4 + r, 4 + col) = t(r, col);
    }
  for (int mu = 1; mu <= 4; ++mu) {
    const Mat<cplx, 4, 16> blk = p12_block(mu, c);
    CMat20& out = g.P(mu);
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 16; ++col) out(r, 4 + col) = blk(r, col);
  }
  return g;
}

}  // namespace vt20
