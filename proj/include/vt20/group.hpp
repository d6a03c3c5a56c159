#pragma once

// Finite transformations D(Lambda, dx) = exp(-i dx_mu P^mu) exp(i w_{mu nu} J^{mu nu} / 2)
// and verification suites for the commutation rules.

#include <string>

#include "vt20/exec.hpp"
#include "vt20/generators.hpp"
#include "vt20/linalg.hpp"

namespace vt20 {

struct PoincareElement {
  Mat44 omega;  // antisymmetric rotation/boost parameters w_{mu nu}
  Vec4 dx{};    // displacement dx^mu
};

using RepMatrix = CMat20;

// exact two-term exponential I - i dx_sigma P^sigma; the nilpotent block
// terminates the series, no approximation is involved
RepMatrix translation_matrix(const Vec4& dx, const GeneratorSet& g);

// matrix exponential of (i/2) sum w_{mu nu} J^{mu nu}; omega must be
// antisymmetric (throws std::domain_error otherwise)
RepMatrix lorentz_matrix(const Mat44& omega, const GeneratorSet& g);

RepMatrix rep_matrix(const PoincareElement& e, const GeneratorSet& g);

// omega for a rotation by theta about z: the vector block maps
// (x, y) -> (x cos - y sin, x sin + y cos) and fixes components 3, 4
Mat44 rotation_z(double theta);

// omega for a boost of rapidity phi along z: the vector block mixes
// components 3, 4 with cosh/sinh entries
Mat44 boost_z(double phi);

// rows/cols 1..4 of a finite transformation, which is real up to rounding;
// throws std::runtime_error if any imaginary part exceeds 1e-13
Mat44 real_vector_block(const RepMatrix& m);

// max |L^T eta L - eta| over entries, for the 4x4 vector block
double eta_preservation_residual(const Mat44& lambda);

struct CommutatorReport {
  double max_residual = 0.0;
  std::string worst;  // label of the worst combination
  int combos = 0;
};

// [J^{mu nu}, J^{rho sigma}] against
// i (eta^{mu rho} J^{nu sigma} - eta^{mu sigma} J^{nu rho}
//    - eta^{nu rho} J^{mu sigma} + eta^{nu sigma} J^{mu rho}), all 256 pairs
CommutatorReport verify_jj_commutators(const GeneratorSet& g, Exec ex = Exec::serial);

// [P^mu, J^{rho sigma}] against -i (eta^{mu rho} P^sigma - eta^{mu sigma} P^rho);
// holds for arbitrary MomentumConstants, not just the default
CommutatorReport verify_pj_commutators(const GeneratorSet& g, Exec ex = Exec::serial);

// [P^mu, P^rho]; structurally zero
CommutatorReport verify_pp_commutators(const GeneratorSet& g);

// max |(P^mu P^nu)(r,c)| over all mu, nu; strictly nilpotent, so exactly 0
double nilpotency_residual(const GeneratorSet& g);

}  // namespace vt20
