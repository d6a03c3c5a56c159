#pragma once

// Parallel transport along curves and the geodesic equation
//   d^2 X^mu / dtau^2 = k T_sigma^mu dX^sigma/dtau,
// integrated with fixed-step classical RK4 (or first-order Euler).

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vt20/exec.hpp"
#include "vt20/generators.hpp"
#include "vt20/linalg.hpp"

namespace vt20 {

enum class Integrator { rk4, euler };
const char* to_string(Integrator m);

struct State {
  Vec4 X{};
  Vec4 V{};
  double tau = 0.0;
};

struct Trajectory {
  std::vector<State> samples;  // n_steps + 1 entries, uniform tau spacing
  double step = 0.0;
  Integrator method = Integrator::rk4;
  std::string field_desc;
};

// tensor field T^{alpha beta}(X)
using TField = std::function<Mat44(const Vec4&)>;

struct BlowupError : std::runtime_error {
  double last_good_tau;
  long last_good_step;
  BlowupError(double tau, long nstep);
};

// dX/dtau = V, dV^mu/dtau = k eta_{rho sigma} T^{rho mu}(X) V^sigma
std::pair<Vec4, Vec4> geodesic_rhs(const State& s, const TField& T, double k);

// fixed-step integration; samples include the initial state; throws
// BlowupError when the state stops being finite
Trajectory integrate(const State& s0, const TField& T, double k, double step, long n_steps,
                     Integrator method = Integrator::rk4);

std::vector<Trajectory> integrate_batch(const std::vector<State>& s0, const TField& T, double k, double step,
                                        long n_steps, Integrator method, Exec ex);

// one first-order transport step: V + k T_sigma^mu V^sigma dtau
Vec4 parallel_transport_step(const State& s, const TField& T, double k, double dtau);

// the same step computed by inverting the 20x20 translation matrix for the
// displacement -V dtau (exact inverse, the translation block is nilpotent)
// and applying it to the flattened psi = (V, T); agrees with the contraction
// form to rounding
Vec4 parallel_transport_step_matrix(const State& s, const TField& T, double k, double dtau, const GeneratorSet& g);

// eta_{alpha beta} v^alpha v^beta
double norm_eta(const Vec4& v);

// max |eta V.V - eta V0.V0| over the samples
double norm_drift(const Trajectory& t);

// d(eta V.V)/dtau = 2 k V_rho V_beta T^{rho beta}, evaluated at s
double norm_rate(const State& s, const TField& T, double k);

struct AntisymmetryReport {
  double max_contraction = 0.0;   // max |V_rho V_beta (T^{rho beta}+T^{beta rho})/2| over samples
  bool all_vanish = false;        // max_contraction <= tol
  Mat44 recovered_symmetric;      // least-squares estimate from the samples
  double recovery_residual = 0.0; // max |recovered - true symmetric part|
  double symmetric_norm = 0.0;    // max |entry| of the true symmetric part
};

// Norm conservation over arbitrary timelike tangents forces T to be
// antisymmetric: the contraction kills the antisymmetric part, and a
// spanning sample set recovers the symmetric part uniquely. Throws
// std::runtime_error when the samples are rank-deficient for the 10
// symmetric degrees of freedom.
AntisymmetryReport check_antisymmetry_necessity(const Mat44& T, double k, const std::vector<Vec4>& velocities,
                                                double tol = 1e-10);

// deterministic spread of unit timelike vectors: boosts of (0,0,0,1) with
// rapidities in [0.25, 2] along spiral directions covering the sphere
std::vector<Vec4> timelike_samples(int n = 16);

struct GeodesicProblem {
  State s0;
  double k = 1.0;
  double step = 1e-3;
  long n_steps = 1;
  Integrator method = Integrator::rk4;
};

// affine change of curve parameter tau = c0 + c1 s: the same worldline obeys
// the geodesic equation in s with coupling c1 k and tangent c1 V; integrating
// the returned problem visits the original events index for index
GeodesicProblem reparametrize(const GeodesicProblem& p, double c0, double c1);

}  // namespace vt20
