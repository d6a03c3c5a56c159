#include "vt20/indexing.hpp"

#include <stdexcept>

namespace vt20 {

namespace {

constexpr std::array<std::pair<int, int>, kTensorSlots> kOrder = {{{1, 2},
                                                                   {1, 3},
                                                                   {1, 4},
                                                                   {2, 3},
                                                                   {2, 4},
                                                                   {3, 4},
                                                                   {1, 1},
                                                                   {2, 2},
                                                                   {3, 3},
                                                                   {4, 4},
                                                                   {2, 1},
                                                                   {3, 1},
                                                                   {4, 1},
                                                                   {3, 2},
                                                                   {4, 2},
                                                                   {4, 3}}};

void check_index(int v) {
  if (v < 1 || v > 4) throw std::domain_error("tensor index out of range 1..4");
}

}  // namespace

double metric(int a, int b) {
  check_index(a);
  check_index(b);
  if (a != b) return 0.0;
  return a == 4 ? -1.0 : 1.0;
}

Mat44 eta44() {
  Mat44 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  m(3, 3) = -1.0;
  return m;
}

const std::array<std::pair<int, int>, kTensorSlots>& tensor_order() { return kOrder; }

int flat_of(int alpha, int beta) {
  check_index(alpha);
  check_index(beta);
  for (int i = 0; i < kTensorSlots; ++i)
    if (kOrder[static_cast<std::size_t>(i)] == std::pair<int, int>{alpha, beta}) return 5 + i;
  throw std::domain_error("flat_of: unreachable");  // the ordering covers all 16 pairs
}

std::pair<int, int> double_of(int n) {
  if (n < 5 || n > 20) throw std::domain_error("flat index out of range 5..20");
  return kOrder[static_cast<std::size_t>(n - 5)];
}

int epsilon(int s, int r, int a, int b) {
  check_index(s);
  check_index(r);
  check_index(a);
  check_index(b);
  int idx[4] = {s, r, a, b};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

}  // namespace vt20
