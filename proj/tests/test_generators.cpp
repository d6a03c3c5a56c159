#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vt20/generators.hpp"
#include "vt20/indexing.hpp"

using namespace vt20;

TEST_CASE("default constants") {
  const MomentumConstants c = MomentumConstants::defaults(2.0);
  CHECK(c.c1 == 0.0);
  CHECK(c.c2 == 1.0);
  CHECK(c.c3 == -1.0);
  CHECK(c.c4 == 0.0);
  CHECK(c.k == 2.0);
}

TEST_CASE("vector block of the rotation generator J^{12}") {
  const CMat4 j = j11_block(1, 2);
  CHECK(j(0, 1) == cplx(0, -1));
  CHECK(j(1, 0) == cplx(0, 1));
  int nonzero = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (j(r, c) != cplx(0)) ++nonzero;
  CHECK(nonzero == 2);
}

TEST_CASE("vector block of the boost generator J^{34} is symmetric") {
  const CMat4 j = j11_block(3, 4);
  CHECK(j(2, 3) == cplx(0, -1));
  CHECK(j(3, 2) == cplx(0, -1));
}

TEST_CASE("J^{rho sigma} is antisymmetric in its labels, diagonal vanishes") {
  for (int r = 1; r <= 4; ++r) {
    CHECK(max_abs(j11_block(r, r)) == 0.0);
    for (int s = 1; s <= 4; ++s) {
      CMat4 sum = j11_block(r, s) + j11_block(s, r);
      CHECK(max_abs(sum) == 0.0);
      CMat16 sum16 = j22_block(r, s) + j22_block(s, r);
      CHECK(max_abs(sum16) == 0.0);
    }
  }
}

TEST_CASE("tensor block of J^{12} maps E_{12} into the 11 and 22 diagonals") {
  const CMat16 j = j22_block(1, 2);
  const int col = flat_of(1, 2) - 5;
  int nonzero = 0;
  for (int r = 0; r < 16; ++r)
    if (j(r, col) != cplx(0)) ++nonzero;
  CHECK(nonzero == 2);
  CHECK(j(flat_of(1, 1) - 5, col) == cplx(0, -1));
  CHECK(j(flat_of(2, 2) - 5, col) == cplx(0, 1));
}

TEST_CASE("default translation block is a pure Kronecker delta times ik") {
  const MomentumConstants c = MomentumConstants::defaults(1.5);
  for (int mu = 1; mu <= 4; ++mu) {
    const auto p = p12_block(mu, c);
    for (int nu = 1; nu <= 4; ++nu)
      for (int slot = 0; slot < kTensorSlots; ++slot) {
        const auto [a, b] = tensor_order()[static_cast<std::size_t>(slot)];
        const cplx want = (a == mu && b == nu) ? cplx(0, 1.5) : cplx(0);
        CHECK(p(nu - 1, slot) == want);
      }
  }
}

TEST_CASE("the c4 term couples through the epsilon symbol") {
  MomentumConstants c;
  c.c1 = 0.0;
  c.c2 = 0.0;
  c.c3 = 0.0;
  c.c4 = 1.0;
  const auto p = p12_block(1, c);
  CHECK(p(1, flat_of(3, 4) - 5) == cplx(0, 1));
  CHECK(p(1, flat_of(4, 3) - 5) == cplx(0, -1));
  // eps_{1 1 a b} = 0: row nu = 1 is empty
  for (int slot = 0; slot < kTensorSlots; ++slot) CHECK(p(0, slot) == cplx(0));
}

TEST_CASE("20-dim embedding: J block diagonal, P in the upper-right block") {
  const GeneratorSet g = build_generators(MomentumConstants::defaults(1.0));

  const CMat20& j = g.J(1, 2);
  const CMat4 j11 = j11_block(1, 2);
  const CMat16 j22 = j22_block(1, 2);
  for (int r = 0; r < 20; ++r)
    for (int c = 0; c < 20; ++c) {
      cplx want(0);
      if (r < 4 && c < 4) want = j11(r, c);
      if (r >= 4 && c >= 4) want = j22(r - 4, c - 4);
      CHECK(j(r, c) == want);
    }

  const CMat20& p = g.P(3);
  const auto p12 = p12_block(3, g.constants);
  for (int r = 0; r < 20; ++r)
    for (int c = 0; c < 20; ++c) {
      const cplx want = (r < 4 && c >= 4) ? p12(r, c - 4) : cplx(0);
      CHECK(p(r, c) == want);
    }
}

TEST_CASE("accessors agree with label antisymmetry") {
  const GeneratorSet g = build_generators(MomentumConstants::defaults(1.0));
  for (int r = 1; r <= 4; ++r) {
    CHECK(max_abs(g.J(r, r)) == 0.0);
    for (int s = 1; s <= 4; ++s) {
      CMat20 sum = g.J(r, s) + g.J(s, r);
      CHECK(max_abs(sum) == 0.0);
    }
  }
}
