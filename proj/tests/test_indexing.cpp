#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "vt20/indexing.hpp"

using namespace vt20;

TEST_CASE("metric is diag(+1,+1,+1,-1)") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      if (a != b)
        CHECK(metric(a, b) == 0.0);
      else
        CHECK(metric(a, b) == (a == 4 ? -1.0 : 1.0));
    }
  CHECK_THROWS_AS(metric(0, 1), std::domain_error);
  CHECK_THROWS_AS(metric(1, 5), std::domain_error);

  const Mat44 eta = eta44();
  CHECK(eta(0, 0) == 1.0);
  CHECK(eta(3, 3) == -1.0);
  CHECK(eta(0, 3) == 0.0);
}

TEST_CASE("canonical double-index order and flat slots") {
  const auto& order = tensor_order();
  CHECK(order.size() == 16);
  CHECK(order[0] == std::pair<int, int>(1, 2));
  CHECK(order[5] == std::pair<int, int>(3, 4));
  CHECK(order[6] == std::pair<int, int>(1, 1));
  CHECK(order[9] == std::pair<int, int>(4, 4));
  CHECK(order[10] == std::pair<int, int>(2, 1));
  CHECK(order[15] == std::pair<int, int>(4, 3));

  CHECK(flat_of(1, 2) == 5);
  CHECK(flat_of(2, 4) == 9);
  CHECK(flat_of(4, 4) == 14);
  CHECK(flat_of(4, 3) == 20);

  CHECK(double_of(9) == std::pair<int, int>(2, 4));
  CHECK(double_of(14) == std::pair<int, int>(4, 4));

  // bijection over all 16 pairs
  std::set<int> seen;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const int n = flat_of(a, b);
      CHECK(n >= 5);
      CHECK(n <= 20);
      CHECK(double_of(n) == std::pair<int, int>(a, b));
      seen.insert(n);
    }
  CHECK(seen.size() == 16);

  CHECK_THROWS_AS(flat_of(0, 2), std::domain_error);
  CHECK_THROWS_AS(flat_of(1, 5), std::domain_error);
  CHECK_THROWS_AS(double_of(4), std::domain_error);
  CHECK_THROWS_AS(double_of(21), std::domain_error);
}

TEST_CASE("epsilon symbol: normalization, antisymmetry, degeneracy") {
  CHECK(epsilon(1, 2, 3, 4) == 1);
  CHECK(epsilon(2, 1, 3, 4) == -1);
  CHECK(epsilon(4, 3, 2, 1) == 1);
  CHECK(epsilon(3, 4, 1, 2) == 1);
  CHECK(epsilon(1, 1, 3, 4) == 0);
  CHECK(epsilon(2, 3, 2, 4) == 0);

  // swapping any adjacent pair flips the sign on every permutation
  int count_nonzero = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          const int e = epsilon(a, b, c, d);
          CHECK(epsilon(b, a, c, d) == -e);
          CHECK(epsilon(a, c, b, d) == -e);
          CHECK(epsilon(a, b, d, c) == -e);
          if (e != 0) ++count_nonzero;
        }
  CHECK(count_nonzero == 24);

  CHECK_THROWS_AS(epsilon(0, 2, 3, 4), std::domain_error);
  CHECK_THROWS_AS(epsilon(1, 2, 3, 5), std::domain_error);
}
