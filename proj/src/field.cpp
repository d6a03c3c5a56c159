#include "vt20/field.hpp"

#include <cmath>
#include <utility>

#include "vt20/indexing.hpp"

namespace vt20 {

std::array<double, 20> flatten(const Psi20& psi) {
  std::array<double, 20> out{};
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = psi.v[static_cast<std::size_t>(i)];
  const auto& order = tensor_order();
  for (int s = 0; s < kTensorSlots; ++s) {
    const auto [a, b] = order[static_cast<std::size_t>(s)];
    out[static_cast<std::size_t>(4 + s)] = psi.T(a - 1, b - 1);
  }
  return out;
}

Psi20 unflatten(const std::array<double, 20>& flat) {
  Psi20 psi;
  for (int i = 0; i < 4; ++i) psi.v[static_cast<std::size_t>(i)] = flat[static_cast<std::size_t>(i)];
  const auto& order = tensor_order();
  for (int s = 0; s < kTensorSlots; ++s) {
    const auto [a, b] = order[static_cast<std::size_t>(s)];
    psi.T(a - 1, b - 1) = flat[static_cast<std::size_t>(4 + s)];
  }
  return psi;
}

Mat44 connection(const Mat44& T, const MomentumConstants& c) {
  // the p12 entries are purely imaginary; multiplying by -i eta_{mu sigma}
  // (eta diagonal, so mu = sigma) leaves eta_{sigma sigma} times the
  // imaginary part, which keeps the whole contraction real and exact
  const auto& order = tensor_order();
  Mat44 gamma;
  for (int sigma = 1; sigma <= 4; ++sigma) {
    const Mat<cplx, 4, 16> blk = p12_block(sigma, c);
    const double sgn = metric(sigma, sigma);
    for (int nu = 1; nu <= 4; ++nu) {
      double acc = 0.0;
      for (int s = 0; s < kTensorSlots; ++s) {
        const auto [a, b] = order[static_cast<std::size_t>(s)];
        acc += blk(nu - 1, s).imag() * T(a - 1, b - 1);
      }
      gamma(sigma - 1, nu - 1) = sgn * acc;
    }
  }
  return gamma;
}

Mat44 raise_first(const Mat44& gamma) {
  Mat44 out;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) out(mu - 1, nu - 1) = metric(mu, mu) * gamma(mu - 1, nu - 1);
  return out;
}

const char* to_string(GammaSymmetry s) {
  switch (s) {
    case GammaSymmetry::symmetric: return "symmetric";
    case GammaSymmetry::antisymmetric: return "antisymmetric";
    case GammaSymmetry::neither: return "neither";
    case GammaSymmetry::zero: return "zero";
  }
  return "?";
}

GammaSymmetry classify_connection_symmetry(const MomentumConstants& c) {
  constexpr double tol = 1e-12;
  bool all_zero = true, all_sym = true, all_anti = true;
  const auto& order = tensor_order();
  for (int s = 0; s < kTensorSlots; ++s) {
    const auto [a, b] = order[static_cast<std::size_t>(s)];
    Mat44 basis;
    basis(a - 1, b - 1) = 1.0;
    const Mat44 up = raise_first(connection(basis, c));
    if (max_abs(up) > tol) all_zero = false;
    if (max_abs_diff(up, transpose(up)) > tol) all_sym = false;
    Mat44 neg = transpose(up);
    neg *= -1.0;
    if (max_abs_diff(up, neg) > tol) all_anti = false;
  }
  if (all_zero) return GammaSymmetry::zero;
  if (all_sym) return GammaSymmetry::symmetric;
  if (all_anti) return GammaSymmetry::antisymmetric;
  return GammaSymmetry::neither;
}

PsiField translate_field(PsiField f, const Vec4& dx, const GeneratorSet& g) {
  const MomentumConstants c = g.constants;
  return [f = std::move(f), dx, c](const Vec4& x) {
    Psi20 shifted = f(add(x, dx));
    const Mat44 gamma = connection(shifted.T, c);
    for (int nu = 0; nu < 4; ++nu) {
      double acc = 0.0;
      for (int sigma = 0; sigma < 4; ++sigma) acc += dx[static_cast<std::size_t>(sigma)] * gamma(sigma, nu);
      shifted.v[static_cast<std::size_t>(nu)] -= acc;
    }
    return shifted;
  };
}

Vec4 delta_v(const PsiField& f, const Vec4& x, const Vec4& dx, double k, const VJacobian* jac) {
  Mat44 dv;  // entry (sigma, mu) = d v^mu / d x^sigma
  if (jac) {
    dv = (*jac)(x);
  } else {
    const double h = std::max(1e-6, 1e-6 * max_abs(x));
    for (int sigma = 0; sigma < 4; ++sigma) {
      Vec4 xp = x, xm = x;
      xp[static_cast<std::size_t>(sigma)] += h;
      xm[static_cast<std::size_t>(sigma)] -= h;
      const Vec4 vp = f(xp).v, vm = f(xm).v;
      for (int mu = 0; mu < 4; ++mu)
        dv(sigma, mu) = (vp[static_cast<std::size_t>(mu)] - vm[static_cast<std::size_t>(mu)]) / (2.0 * h);
    }
  }
  const Mat44 T = f(x).T;
  Vec4 out{};
  for (int mu = 1; mu <= 4; ++mu) {
    double acc = 0.0;
    for (int sigma = 1; sigma <= 4; ++sigma) {
      // T_sigma^mu = eta_{rho sigma} T^{rho mu}
      const double t_low = metric(sigma, sigma) * T(sigma - 1, mu - 1);
      acc += (dv(sigma - 1, mu - 1) - k * t_low) * dx[static_cast<std::size_t>(sigma - 1)];
    }
    out[static_cast<std::size_t>(mu - 1)] = acc;
  }
  return out;
}

}  // namespace vt20
