#pragma once

// Index conventions for the 20-component field psi = (v^mu; T^{alpha beta}).
// Spacetime indices are 1-based, 1..3 spatial and 4 time; the metric is
// diag(+1,+1,+1,-1). Flat components 1..4 hold the vector part and 5..20 the
// tensor part in the canonical double-index ordering below.

#include <array>
#include <utility>

#include "vt20/linalg.hpp"

namespace vt20 {

inline constexpr int kTensorSlots = 16;

// eta_{ab} == eta^{ab}; throws std::domain_error outside 1..4.
double metric(int a, int b);

Mat44 eta44();

// Canonical ordering of the 16 double indices, mapped to flat slots 5..20:
// {12,13,14,23,24,34,11,22,33,44,21,31,41,32,42,43}
const std::array<std::pair<int, int>, kTensorSlots>& tensor_order();

// flat slot in 5..20 for the double index (alpha,beta)
int flat_of(int alpha, int beta);

// inverse of flat_of; n in 5..20
std::pair<int, int> double_of(int n);

// totally antisymmetric symbol on 1..4 with epsilon(1,2,3,4) = +1
int epsilon(int s, int r, int a, int b);

}  // namespace vt20
