#pragma once

// Fixed-size dense matrices over double or complex<double>, row-major.
// Sizes here are tiny (<= 20), so everything is value-type std::array storage
// with no heap traffic; products and the exponential are textbook loops.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace vt20 {

using cplx = std::complex<double>;

inline constexpr cplx iunit{0.0, 1.0};

template <class T, int R, int C>
struct Mat {
  static_assert(R > 0 && C > 0);
  std::array<T, static_cast<std::size_t>(R) * C> a{};  // zero-initialized

  static constexpr int rows = R;
  static constexpr int cols = C;

  T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * C + c]; }
  const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * C + c]; }

  static Mat identity()
    requires(R == C)
  {
    Mat m;
    for (int i = 0; i < R; ++i) m(i, i) = T(1);
    return m;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
  }
  Mat& operator*=(const T& s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend Mat operator+(Mat l, const Mat& r) { return l += r; }
  friend Mat operator-(Mat l, const Mat& r) { return l -= r; }
  friend Mat operator*(Mat l, const T& s) { return l *= s; }
  friend Mat operator*(const T& s, Mat r) { return r *= s; }
  friend bool operator==(const Mat& l, const Mat& r) { return l.a == r.a; }
};

template <class T, int R, int K, int C>
Mat<T, R, C> operator*(const Mat<T, R, K>& l, const Mat<T, K, C>& r) {
  Mat<T, R, C> out;
  for (int i = 0; i < R; ++i)
    for (int k = 0; k < K; ++k) {
      const T lik = l(i, k);
      if (lik == T(0)) continue;
      for (int j = 0; j < C; ++j) out(i, j) += lik * r(k, j);
    }
  return out;
}

template <class T, int R, int C>
std::array<T, static_cast<std::size_t>(R)> operator*(const Mat<T, R, C>& m,
                                                     const std::array<T, static_cast<std::size_t>(C)>& v) {
  std::array<T, static_cast<std::size_t>(R)> out{};
  for (int i = 0; i < R; ++i) {
    T s(0);
    for (int j = 0; j < C; ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

template <class T, int R, int C>
Mat<T, C, R> transpose(const Mat<T, R, C>& m) {
  Mat<T, C, R> out;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) out(j, i) = m(i, j);
  return out;
}

template <class T, int R, int C>
double max_abs(const Mat<T, R, C>& m) {
  double mx = 0;
  for (const auto& x : m.a) mx = std::max(mx, std::abs(x));
  return mx;
}

template <class T, int R, int C>
double max_abs_diff(const Mat<T, R, C>& l, const Mat<T, R, C>& r) {
  double mx = 0;
  for (std::size_t i = 0; i < l.a.size(); ++i) mx = std::max(mx, std::abs(l.a[i] - r.a[i]));
  return mx;
}

using CMat4 = Mat<cplx, 4, 4>;
using CMat16 = Mat<cplx, 16, 16>;
using CMat20 = Mat<cplx, 20, 20>;
using Mat44 = Mat<double, 4, 4>;
using Vec4 = std::array<double, 4>;

inline Vec4 add(const Vec4& l, const Vec4& r) {
  return {l[0] + r[0], l[1] + r[1], l[2] + r[2], l[3] + r[3]};
}
inline Vec4 sub(const Vec4& l, const Vec4& r) {
  return {l[0] - r[0], l[1] - r[1], l[2] - r[2], l[3] - r[3]};
}
inline Vec4 scale(const Vec4& v, double s) { return {v[0] * s, v[1] * s, v[2] * s, v[3] * s}; }
inline double max_abs(const Vec4& v) {
  return std::max(std::max(std::abs(v[0]), std::abs(v[1])), std::max(std::abs(v[2]), std::abs(v[3])));
}

// exp(A) by scaling and squaring around a Taylor core. Inputs here have
// moderate norm (rotation/boost parameters), so the term count stays small.
template <int N>
Mat<cplx, N, N> expm(const Mat<cplx, N, N>& A) {
  // inf-norm for the scaling decision
  double nrm = 0;
  for (int i = 0; i < N; ++i) {
    double row = 0;
    for (int j = 0; j < N; ++j) row += std::abs(A(i, j));
    nrm = std::max(nrm, row);
  }
  int squarings = 0;
  double scaled = nrm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  Mat<cplx, N, N> B = A;
  B *= cplx(std::ldexp(1.0, -squarings), 0.0);

  Mat<cplx, N, N> sum = Mat<cplx, N, N>::identity();
  Mat<cplx, N, N> term = Mat<cplx, N, N>::identity();
  for (int j = 1; j <= 40; ++j) {
    term = term * B;
    term *= cplx(1.0 / j, 0.0);
    sum += term;
    if (max_abs(term) < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// LU decomposition with partial pivoting; shared by solve and inverse.
template <class T, int N>
struct Lu {
  Mat<T, N, N> lu;
  std::array<int, static_cast<std::size_t>(N)> perm{};
  double min_pivot = 0;  // smallest |pivot| encountered
  double max_pivot = 0;
};

template <class T, int N>
Lu<T, N> lu_decompose(Mat<T, N, N> m) {
  Lu<T, N> out;
  for (int i = 0; i < N; ++i) out.perm[static_cast<std::size_t>(i)] = i;
  out.min_pivot = 1.0 / 0.0;
  for (int col = 0; col < N; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int r = col + 1; r < N; ++r) {
      const double v = std::abs(m(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) throw std::runtime_error("lu_decompose: singular matrix");
    if (piv != col) {
      for (int j = 0; j < N; ++j) std::swap(m(col, j), m(piv, j));
      std::swap(out.perm[static_cast<std::size_t>(col)], out.perm[static_cast<std::size_t>(piv)]);
    }
    out.min_pivot = std::min(out.min_pivot, best);
    out.max_pivot = std::max(out.max_pivot, best);
    const T d = m(col, col);
    for (int r = col + 1; r < N; ++r) {
      const T f = m(r, col) / d;
      m(r, col) = f;
      for (int j = col + 1; j < N; ++j) m(r, j) -= f * m(col, j);
    }
  }
  out.lu = m;
  return out;
}

template <class T, int N>
std::array<T, static_cast<std::size_t>(N)> lu_solve(const Lu<T, N>& f,
                                                    const std::array<T, static_cast<std::size_t>(N)>& b) {
  std::array<T, static_cast<std::size_t>(N)> x{};
  for (int i = 0; i < N; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < i; ++j) x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
  for (int i = N - 1; i >= 0; --i) {
    for (int j = i + 1; j < N; ++j) x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] /= f.lu(i, i);
  }
  return x;
}

template <class T, int N>
Mat<T, N, N> lu_inverse(const Mat<T, N, N>& m) {
  const auto f = lu_decompose<T, N>(m);
  Mat<T, N, N> inv;
  std::array<T, static_cast<std::size_t>(N)> e{};
  for (int c = 0; c < N; ++c) {
    e.fill(T(0));
    e[static_cast<std::size_t>(c)] = T(1);
    const auto col = lu_solve<T, N>(f, e);
    for (int r = 0; r < N; ++r) inv(r, c) = col[static_cast<std::size_t>(r)];
  }
  return inv;
}

}  // namespace vt20
