// Test-side reference implementations, kept deliberately naive and separate
// from the library code they check.
#pragma once

#include <cmath>
#include <vector>

#include "specband/bandmatrix.hpp"
#include "specband/initial_conditions.hpp"
#include "specband/measure.hpp"
#include "specband/vecpoly.hpp"

namespace oracles {

// Direct long-double summation of sum_l x_l^k W[i][j].
inline std::vector<double> naive_moment(const specband::MatrixMeasure& sigma,
                                        int k) {
  const int n = sigma.dim();
  std::vector<long double> acc(static_cast<size_t>(n) * n, 0.0L);
  for (const auto& a : sigma.atoms()) {
    long double xk = 1.0L;
    for (int e = 0; e < k; ++e) xk *= a.x;
    for (int ij = 0; ij < n * n; ++ij) acc[ij] += xk * a.weight[ij];
  }
  std::vector<double> out(acc.size());
  for (size_t ij = 0; ij < acc.size(); ++ij)
    out[ij] = static_cast<double>(acc[ij]);
  return out;
}

// Direct summation of sum_l r(x_l)^T W_l s(x_l) through the polynomials'
// own evaluation.
inline double naive_inner(const specband::VectorPolynomial& r,
                          const specband::VectorPolynomial& s,
                          const specband::MatrixMeasure& sigma) {
  const int n = sigma.dim();
  long double acc = 0.0L;
  for (const auto& a : sigma.atoms()) {
    const auto rv = r.evaluate(a.x);
    const auto sv = s.evaluate(a.x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc += static_cast<long double>(rv[i]) * a.weight[i * n + j] * sv[j];
  }
  return static_cast<double>(acc);
}

// Dense product of two row-major square matrices.
inline std::vector<double> matmul(const std::vector<double>& a,
                                  const std::vector<double>& b, int n) {
  std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a[static_cast<size_t>(i) * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<size_t>(i) * n + j] +=
            aik * b[static_cast<size_t>(k) * n + j];
    }
  return c;
}

// The moments of the spectral function satisfy
//   T^t S_k(T) T = upper-left n x n block of A_N^k,
// which needs nothing but matrix powers. This pins every moment the
// forward construction produces without touching an eigensolver.
inline std::vector<double> power_block_moment(const specband::BandMatrix& a,
                                              int N, int k) {
  const int n = a.half_width();
  const std::vector<double> dense = a.dense(N);
  std::vector<double> p(static_cast<size_t>(N) * N, 0.0);
  for (int i = 0; i < N; ++i) p[static_cast<size_t>(i) * N + i] = 1.0;
  for (int e = 0; e < k; ++e) p = matmul(p, dense, N);
  std::vector<double> block(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      block[static_cast<size_t>(i) * n + j] = p[static_cast<size_t>(i) * N + j];
  return block;
}

// T^t M T for an n x n block.
inline std::vector<double> congruence(const specband::InitialConditions& t,
                                      const std::vector<double>& m) {
  const int n = t.dim();
  std::vector<double> tm(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += t.entry(k, i) * m[static_cast<size_t>(k) * n + j];
      tm[static_cast<size_t>(i) * n + j] = s;
    }
  std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += tm[static_cast<size_t>(i) * n + k] * t.entry(k, j);
      out[static_cast<size_t>(i) * n + j] = s;
    }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracles
