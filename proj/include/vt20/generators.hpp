#pragma once

// Generators of the 20-dimensional vector (+) tensor representation of the
// Poincare group. Rotations and boosts J^{rho sigma} are block diagonal: a
// 4x4 vector block and a 16x16 tensor block. Translations P^mu live entirely
// in the 4x16 upper-right block, so they are strictly nilpotent: P P = 0.

#include <array>

#include "vt20/indexing.hpp"
#include "vt20/linalg.hpp"

namespace vt20 {

// The translation block is parametrized by four constants with dimensions of
// inverse length. The default choice c2 = -c3 = k/2, c1 = c4 = 0 makes the
// block a single Kronecker delta, i k d^mu_alpha d^nu_beta.
struct MomentumConstants {
  double c1 = 0.0;
  double c2 = 0.5;
  double c3 = -0.5;
  double c4 = 0.0;
  double k = 1.0;

  static MomentumConstants defaults(double k = 1.0) { return {0.0, k / 2, -k / 2, 0.0, k}; }
};

// vector block: entry (mu,nu) = i (eta^{sigma mu} d^rho_nu - eta^{rho mu} d^sigma_nu)
CMat4 j11_block(int rho, int sigma);

// tensor block, rows and columns in the canonical double-index ordering
CMat16 j22_block(int rho, int sigma);

// translation block, entry (nu; alpha beta) =
//   i [ (c1+c2-c3) d^mu_a d^nu_b + (c1+c2+c3) d^mu_b d^nu_a
//       - 2 c1 eta^{mu nu} eta_{ab} + c4 eta^{mu s} eta^{nu r} eps_{s r a b} ]
Mat<cplx, 4, 16> p12_block(int mu, const MomentumConstants& c);

struct GeneratorSet {
  MomentumConstants constants;
  std::array<CMat20, 16> j;  // all (rho,sigma) pairs; diagonal entries are zero matrices
  std::array<CMat20, 4> p;

  const CMat20& J(int rho, int sigma) const;
  CMat20& J(int rho, int sigma);
  const CMat20& P(int mu) const;
  CMat20& P(int mu);
};

GeneratorSet build_generators(const MomentumConstants& c);

}  // namespace vt20
