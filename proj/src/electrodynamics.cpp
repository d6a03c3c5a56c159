#include "vt20/electrodynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace vt20 {

Mat44 f_from_eb(const EMField& em) {
  Mat44 F;
  F(0, 1) = em.B[2];
  F(0, 2) = -em.B[1];
  F(1, 2) = em.B[0];
  F(0, 3) = -em.E[0];
  F(1, 3) = -em.E[1];
  F(2, 3) = -em.E[2];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < r; ++c) F(r, c) = -F(c, r);
  return F;
}

EMField eb_from_f(const Mat44& F) {
  EMField em;
  em.B = {F(1, 2), -F(0, 2), F(0, 1)};
  em.E = {-F(0, 3), -F(1, 3), -F(2, 3)};
  return em;
}

Mat44 t_from_f(const Mat44& F, double q, double m, double k) {
  if (m == 0.0) throw std::domain_error("t_from_f: mass must be nonzero");
  if (k == 0.0) throw std::domain_error("t_from_f: k must be nonzero");
  Mat44 T = F;
  T *= -(q / (k * m));
  return T;
}

Psi20 pack_psi(const Vec4& V, const EMField& em, double q, double m, double k) {
  return {V, t_from_f(f_from_eb(em), q, m, k)};
}

Vec4 promote_velocity(const std::array<double, 3>& u) {
  const double u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  if (u2 >= 1.0) throw std::domain_error("promote_velocity: |u| must be below 1");
  const double gamma = 1.0 / std::sqrt(1.0 - u2);
  return {gamma * u[0], gamma * u[1], gamma * u[2], gamma};
}

State constant_b_orbit(const ChargedParticle& p, double Bz, double tau) {
  if (p.V0[2] != 0.0) throw std::domain_error("constant_b_orbit: requires V0^3 = 0");
  const double omega = p.q * Bz / p.m;
  if (omega == 0.0) throw std::domain_error("constant_b_orbit: q Bz must be nonzero");
  const double c = std::cos(omega * tau), s = std::sin(omega * tau);
  State out;
  out.V = {p.V0[0] * c + p.V0[1] * s, -p.V0[0] * s + p.V0[1] * c, 0.0, p.V0[3]};
  out.X = {p.X0[0] + (p.V0[0] * s + p.V0[1] * (1.0 - c)) / omega,
           p.X0[1] + (p.V0[1] * s - p.V0[0] * (1.0 - c)) / omega, p.X0[2], p.X0[3] + p.V0[3] * tau};
  out.tau = tau;
  return out;
}

State constant_e_orbit(const ChargedParticle& p, double Ez, double tau) {
  if (p.V0[0] != 0.0 || p.V0[1] != 0.0)
    throw std::domain_error("constant_e_orbit: requires V0^1 = V0^2 = 0");
  const double a = p.q * Ez / p.m;
  State out;
  out.tau = tau;
  if (a == 0.0) {
    out.V = p.V0;
    out.X = add(p.X0, scale(p.V0, tau));
    return out;
  }
  const double ch = std::cosh(a * tau), sh = std::sinh(a * tau);
  out.V = {0.0, 0.0, p.V0[2] * ch + p.V0[3] * sh, p.V0[2] * sh + p.V0[3] * ch};
  out.X = {p.X0[0], p.X0[1], p.X0[2] + (p.V0[2] * sh + p.V0[3] * (ch - 1.0)) / a,
           p.X0[3] + (p.V0[2] * (ch - 1.0) + p.V0[3] * sh) / a};
  return out;
}

namespace {

Mat44 scenario_tensor(const TangentFieldSpec& spec) {
  EMField em;
  if (spec.scenario == Scenario::constant_b)
    em.B = {0.0, 0.0, spec.strength};
  else
    em.E = {0.0, 0.0, spec.strength};
  return t_from_f(f_from_eb(em), spec.q, spec.m, spec.k);
}

}  // namespace

PsiField tangent_field(const TangentFieldSpec& spec) {
  const Mat44 T = scenario_tensor(spec);
  const double rate = spec.q * spec.strength / spec.m;  // omega or a
  const Vec4 center = spec.center;
  if (spec.scenario == Scenario::constant_b) {
    return [T, rate, center](const Vec4& x) {
      const double dx = x[0] - center[0], dy = x[1] - center[1];
      const double v1 = rate * dy, v2 = -rate * dx;
      return Psi20{{v1, v2, 0.0, std::sqrt(1.0 + v1 * v1 + v2 * v2)}, T};
    };
  }
  return [T, rate](const Vec4& x) {
    const double v3 = rate * x[3];
    return Psi20{{0.0, 0.0, v3, std::sqrt(1.0 + v3 * v3)}, T};
  };
}

VJacobian tangent_field_jacobian(const TangentFieldSpec& spec) {
  const double rate = spec.q * spec.strength / spec.m;
  const Vec4 center = spec.center;
  if (spec.scenario == Scenario::constant_b) {
    return [rate, center](const Vec4& x) {
      const double dx = x[0] - center[0], dy = x[1] - center[1];
      const double v1 = rate * dy, v2 = -rate * dx;
      const double v4 = std::sqrt(1.0 + v1 * v1 + v2 * v2);
      Mat44 jac;  // entry (sigma, mu) = d v^mu / d x^sigma
      jac(1, 0) = rate;   // d v1 / d y
      jac(0, 1) = -rate;  // d v2 / d x
      jac(0, 3) = rate * rate * dx / v4;
      jac(1, 3) = rate * rate * dy / v4;
      return jac;
    };
  }
  return [rate](const Vec4& x) {
    const double v3 = rate * x[3];
    const double v4 = std::sqrt(1.0 + v3 * v3);
    Mat44 jac;
    jac(3, 2) = rate;
    jac(3, 3) = rate * rate * x[3] / v4;
    return jac;
  };
}

bool degenerate_member(const TangentFieldSpec& spec, const Vec4& x, double eps) {
  if (spec.scenario != Scenario::constant_b) return false;
  const double dx = x[0] - spec.center[0], dy = x[1] - spec.center[1];
  return std::sqrt(dx * dx + dy * dy) <= eps;
}

double family_min_separation(const TangentFieldSpec& spec, const std::vector<double>& members, double t_max,
                             int n_samples) {
  if (members.size() < 2 || n_samples < 2) throw std::domain_error("family_min_separation: need >= 2 members and samples");
  const double rate = spec.q * spec.strength / spec.m;
  double min_sep = 1.0 / 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      for (int s = 0; s < n_samples; ++s) {
        const double t = t_max * s / (n_samples - 1);  // coordinate time, shared by both members
        double sep;
        if (spec.scenario == Scenario::constant_b) {
          // member = orbit radius; speed follows from the common angular rate
          const double ri = members[i], rj = members[j];
          const double pi_ang = rate * t / std::sqrt(1.0 + rate * rate * ri * ri);  // tau_i = t / V4_i
          const double pj_ang = rate * t / std::sqrt(1.0 + rate * rate * rj * rj);
          const double xi = spec.center[0] + ri * std::cos(pi_ang), yi = spec.center[1] - ri * std::sin(pi_ang);
          const double xj = spec.center[0] + rj * std::cos(pj_ang), yj = spec.center[1] - rj * std::sin(pj_ang);
          sep = std::sqrt((xi - xj) * (xi - xj) + (yi - yj) * (yi - yj));
        } else {
          // member = starting z at t = 0; all members share z(t) - z0
          sep = std::abs(members[i] - members[j]);
          (void)rate;
        }
        min_sep = std::min(min_sep, sep);
      }
    }
  }
  return min_sep;
}

}  // namespace vt20
