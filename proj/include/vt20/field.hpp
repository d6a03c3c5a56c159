#pragma once

// The 20-component field psi = (v; T), the action of translations on it, and
// the connection extracted from the translation block.

#include <array>
#include <functional>

#include "vt20/generators.hpp"
#include "vt20/linalg.hpp"

namespace vt20 {

struct Psi20 {
  Vec4 v{};
  Mat44 T;  // T^{alpha beta}, 0-based storage of 1-based indices
};

// flat layout: slots 1..4 vector part, 5..20 tensor part in canonical order
std::array<double, 20> flatten(const Psi20& psi);
Psi20 unflatten(const std::array<double, 20>& flat);

using PsiField = std::function<Psi20(const Vec4&)>;
// analytic Jacobian of the vector part: entry (sigma, mu) = d v^mu / d x^sigma
using VJacobian = std::function<Mat44(const Vec4&)>;

// Gamma_sigma^nu = -i eta_{mu sigma} (P12^mu)^nu_{alpha beta} T^{alpha beta};
// row sigma, column nu. For the default constants this equals k times T with
// the first index lowered. Depends on c1..c4 only; k enters through them.
Mat44 connection(const Mat44& T, const MomentumConstants& c);

// Gamma^{mu nu} = eta^{sigma mu} Gamma_sigma^nu
Mat44 raise_first(const Mat44& gamma);

enum class GammaSymmetry { symmetric, antisymmetric, neither, zero };
const char* to_string(GammaSymmetry s);

// decides how Gamma^{mu nu} behaves for arbitrary T by evaluating it on the
// 16 elementary tensors (tolerance 1e-12 per image)
GammaSymmetry classify_connection_symmetry(const MomentumConstants& c);

// the field x -> D^{-1}(1, dx) psi(x + dx): vector part picks up
// -dx^sigma Gamma_sigma^nu of the tensor part, tensor part carried unchanged
PsiField translate_field(PsiField f, const Vec4& dx, const GeneratorSet& g);

// first-order change (d_sigma v^mu - k T_sigma^mu) dx^sigma; derivatives come
// from jac when given, otherwise central differences with
// h = max(1e-6, 1e-6 |x|)
Vec4 delta_v(const PsiField& f, const Vec4& x, const Vec4& dx, double k, const VJacobian* jac = nullptr);

}  // namespace vt20
