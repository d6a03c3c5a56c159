#pragma once

// The physical identification T = -(q/km) F: packing electric and magnetic
// 3-vectors into the antisymmetric F^{mu nu}, closed-form orbits for the two
// constant-field scenarios, and tangent-vector fields for families of
// non-intersecting geodesics. Natural units, c = 1.

#include <array>
#include <vector>

#include "vt20/field.hpp"
#include "vt20/geodesic.hpp"
#include "vt20/linalg.hpp"

namespace vt20 {

struct EMField {
  std::array<double, 3> E{};
  std::array<double, 3> B{};
};

// F^{12} = B3, F^{13} = -B2, F^{23} = B1, F^{14} = -E1, F^{24} = -E2,
// F^{34} = -E3; lower triangle by antisymmetry, diagonal zero
Mat44 f_from_eb(const EMField& em);

// inverse reading of the same slots
EMField eb_from_f(const Mat44& F);

// T^{mu nu} = -(q/(k m)) F^{mu nu}; throws std::domain_error when m or k is 0
Mat44 t_from_f(const Mat44& F, double q, double m, double k);

// psi = (V; -(q/km) F)
Psi20 pack_psi(const Vec4& V, const EMField& em, double q, double m, double k);

// gamma (u, 1) with gamma = 1/sqrt(1-|u|^2); throws when |u| >= 1
Vec4 promote_velocity(const std::array<double, 3>& u);

struct ChargedParticle {
  double q = 1.0;
  double m = 1.0;
  Vec4 X0{};
  Vec4 V0{{0.0, 0.0, 0.0, 1.0}};
};

// Closed form for B = (0,0,Bz): (V1,V2) rotates at omega = q Bz / m, the
// xy-projection is a circle of radius |Vperp| m / (q Bz), time advances
// uniformly. Requires V03 = 0 and q Bz != 0 (throws std::domain_error).
State constant_b_orbit(const ChargedParticle& p, double Bz, double tau);

// Closed form for E = (0,0,Ez) with a = q Ez / m: hyperbolic motion,
// V3 = V03 cosh(a tau) + V04 sinh(a tau), V4 = V03 sinh + V04 cosh; a = 0
// degenerates to a straight worldline. Requires V01 = V02 = 0.
State constant_e_orbit(const ChargedParticle& p, double Ez, double tau);

enum class Scenario { constant_b, constant_e };

struct TangentFieldSpec {
  Scenario scenario = Scenario::constant_b;
  double q = 1.0;
  double m = 1.0;
  double k = 1.0;
  double strength = 1.0;  // Bz or Ez
  Vec4 center{};          // constant_b: x,y of the common orbit center
};

// psi over the patch: the tensor part is the constant -(q/km) F and the
// vector part is the tangent of the family member through each point.
//   constant_b: concentric circles about center, all at omega = q Bz / m;
//     Vperp = omega (y - yc, -(x - xc)), V3 = 0, V4 = sqrt(1 + |Vperp|^2)
//   constant_e: hyperbolas indexed by starting z, all at rest at t = 0;
//     V3 = a t, V4 = sqrt(1 + (a t)^2), independent of z
// Along its own curves every member keeps delta_v = 0 (parallel tangents).
PsiField tangent_field(const TangentFieldSpec& spec);

// analytic d v^mu / d x^sigma of tangent_field, for exact delta_v tests
VJacobian tangent_field_jacobian(const TangentFieldSpec& spec);

// the stationary member of the constant_b family (the center point);
// well-defined but degenerate, so callers may want to skip it
bool degenerate_member(const TangentFieldSpec& spec, const Vec4& x, double eps = 1e-12);

// Smallest spatial separation between distinct family members, sampled at
// matched coordinate times. Members are radii (constant_b) or starting-z
// offsets (constant_e). A non-positive result would mean intersecting
// members; returned as a value so scenarios can warn rather than abort.
double family_min_separation(const TangentFieldSpec& spec, const std::vector<double>& members, double t_max,
                             int n_samples);

}  // namespace vt20
