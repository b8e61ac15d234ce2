#include "specband/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specband/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specband::kernels {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagTol = 1e-14;

double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

double offdiag_mass(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

// Rotation (c, s) annihilating a[p][q]; the stable formulation of
// Rutishauser.
void make_rotation(double app, double aqq, double apq, double& c, double& s) {
  if (apq == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0)
                       ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                       : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
  c = 1.0 / std::sqrt(1.0 + t * t);
  s = t * c;
}

void sort_and_fix_signs(std::vector<double>& a, std::vector<double>& v,
                        int n, SymEigen& out) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });

  out.values.resize(n);
  out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int l = 0; l < n; ++l) {
    const int src = order[l];
    out.values[l] = a[src * n + src];
    double vmax = 0.0;
    for (int i = 0; i < n; ++i) vmax = std::max(vmax, std::abs(v[i * n + src]));
    double sign = 1.0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(v[i * n + src]) > 1e-12 * vmax) {
        sign = v[i * n + src] > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (int i = 0; i < n; ++i) out.vectors[i * n + l] = sign * v[i * n + src];
  }
}

}  // namespace

SymEigen sym_eigen_serial(const std::vector<double>& input, int n) {
  std::vector<double> a = input;
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double tol = kOffdiagTol * std::max(frobenius(a), 1e-300);
  int sweep = 0;
  while (offdiag_mass(a, n) > tol) {
    if (++sweep > kMaxSweeps)
      throw NoConvergence("jacobi eigensolver: sweep cap reached");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= tol / n) continue;
        double c, s;
        make_rotation(a[p * n + p], a[q * n + q], apq, c, s);
        // A <- J^T A J on rows/cols p,q
        for (int i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const double apj = a[p * n + j];
          const double aqj = a[q * n + j];
          a[p * n + j] = c * apj - s * aqj;
          a[q * n + j] = s * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v[i * n + p];
          const double viq = v[i * n + q];
          v[i * n + p] = c * vip - s * viq;
          v[i * n + q] = s * vip + c * viq;
        }
      }
    }
  }

  SymEigen out;
  out.sweeps = sweep;
  sort_and_fix_signs(a, v, n, out);
  return out;
}

SymEigen sym_eigen_parallel(const std::vector<double>& input, int n,
                            int threads) {
#ifndef _OPENMP
  (void)threads;
  return sym_eigen_serial(input, n);
#else
  if (n < 2) return sym_eigen_serial(input, n);

  std::vector<double> a = input;
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  // Round-robin tournament: m slots, slot 0 pinned, the rest rotate.
  const int m = (n % 2 == 0) ? n : n + 1;  // odd n pairs against a ghost
  std::vector<int> ring(m);
  std::iota(ring.begin(), ring.end(), 0);

  const double tol = kOffdiagTol * std::max(frobenius(a), 1e-300);
  std::vector<double> cs(m / 2), sn(m / 2);
  std::vector<int> pp(m / 2), qq(m / 2);

  int sweep = 0;
  while (offdiag_mass(a, n) > tol) {
    if (++sweep > kMaxSweeps)
      throw NoConvergence("jacobi eigensolver: sweep cap reached");
    for (int round = 0; round < m - 1; ++round) {
      int npairs = 0;
      for (int k = 0; k < m / 2; ++k) {
        int x = ring[k];
        int y = ring[m - 1 - k];
        if (x >= n || y >= n) continue;  // ghost slot
        if (x > y) std::swap(x, y);
        pp[npairs] = x;
        qq[npairs] = y;
        ++npairs;
      }
      // Angles from the current matrix, all at once.
      for (int t = 0; t < npairs; ++t) {
        const double apq = a[pp[t] * n + qq[t]];
        if (std::abs(apq) <= tol / n) {
          cs[t] = 1.0;
          sn[t] = 0.0;
        } else {
          make_rotation(a[pp[t] * n + pp[t]], a[qq[t] * n + qq[t]], apq,
                        cs[t], sn[t]);
        }
      }
      // Phase 1: row rotations. Pairs touch disjoint row sets.
#pragma omp parallel for schedule(static) num_threads(threads)
      for (int t = 0; t < npairs; ++t) {
        const int p = pp[t], q = qq[t];
        const double c = cs[t], s = sn[t];
        if (s == 0.0 && c == 1.0) continue;
        for (int j = 0; j < n; ++j) {
          const double apj = a[p * n + j];
          const double aqj = a[q * n + j];
          a[p * n + j] = c * apj - s * aqj;
          a[q * n + j] = s * apj + c * aqj;
        }
      }
      // Phase 2: column rotations, and the eigenvector accumulation.
#pragma omp parallel for schedule(static) num_threads(threads)
      for (int t = 0; t < npairs; ++t) {
        const int p = pp[t], q = qq[t];
        const double c = cs[t], s = sn[t];
        if (s == 0.0 && c == 1.0) continue;
        for (int i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
          const double vip = v[i * n + p];
          const double viq = v[i * n + q];
          v[i * n + p] = c * vip - s * viq;
          v[i * n + q] = s * vip + c * viq;
        }
      }
      // Advance the ring (slot 0 fixed).
      const int last = ring[m - 1];
      for (int k = m - 1; k > 1; --k) ring[k] = ring[k - 1];
      ring[1] = last;
    }
  }

  SymEigen out;
  out.sweeps = sweep;
  sort_and_fix_signs(a, v, n, out);
  return out;
#endif
}

SymEigen sym_eigen(const std::vector<double>& a, int n, int threads) {
  if (threads > 1 && n >= 64) return sym_eigen_parallel(a, n, threads);
  return sym_eigen_serial(a, n);
}

double weighted_dot_serial(const double* lhs, const double* rhs,
                           const double* weights, int atom_count, int n) {
  double acc = 0.0;
  for (int l = 0; l < atom_count; ++l) {
    const double* w = weights + static_cast<size_t>(l) * n * n;
    const double* x = lhs + static_cast<size_t>(l) * n;
    const double* y = rhs + static_cast<size_t>(l) * n;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += w[i * n + j] * y[j];
      acc += x[i] * row;
    }
  }
  return acc;
}

namespace {
constexpr int kChunk = 256;

double atom_block_dot(const double* lhs, const double* rhs,
                      const double* weights, int lo, int hi, int n) {
  double acc = 0.0;
  for (int l = lo; l < hi; ++l) {
    const double* w = weights + static_cast<size_t>(l) * n * n;
    const double* x = lhs + static_cast<size_t>(l) * n;
    const double* y = rhs + static_cast<size_t>(l) * n;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += w[i * n + j] * y[j];
      acc += x[i] * row;
    }
  }
  return acc;
}
}  // namespace

double weighted_dot_parallel(const double* lhs, const double* rhs,
                             const double* weights, int atom_count, int n,
                             int threads) {
#ifndef _OPENMP
  (void)threads;
  return weighted_dot_serial(lhs, rhs, weights, atom_count, n);
#else
  const int chunks = (atom_count + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (int cidx = 0; cidx < chunks; ++cidx) {
    const int lo = cidx * kChunk;
    const int hi = std::min(atom_count, lo + kChunk);
    partial[cidx] = atom_block_dot(lhs, rhs, weights, lo, hi, n);
  }
  // Combine in chunk order: identical result for any thread count.
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
#endif
}

double weighted_dot(const double* lhs, const double* rhs,
                    const double* weights, int atom_count, int n,
                    int threads) {
  if (threads > 1 && atom_count >= 2 * kChunk)
    return weighted_dot_parallel(lhs, rhs, weights, atom_count, n, threads);
  return weighted_dot_serial(lhs, rhs, weights, atom_count, n);
}

namespace {

void kahan_add(double term, double& sum, double& comp) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

void moment_block(const double* nodes, const double* weights, int lo, int hi,
                  int n, int k, bool compensated, double* sum, double* comp) {
  for (int l = lo; l < hi; ++l) {
    double xk = 1.0;
    for (int e = 0; e < k; ++e) xk *= nodes[l];
    const double* w = weights + static_cast<size_t>(l) * n * n;
    for (int ij = 0; ij < n * n; ++ij) {
      if (compensated)
        kahan_add(xk * w[ij], sum[ij], comp[ij]);
      else
        sum[ij] += xk * w[ij];
    }
  }
}

}  // namespace

void moment_sum_serial(const double* nodes, const double* weights,
                       int atom_count, int n, int k, double* out) {
  const bool compensated = atom_count > 64;
  std::vector<double> comp(static_cast<size_t>(n) * n, 0.0);
  std::fill(out, out + static_cast<size_t>(n) * n, 0.0);
  moment_block(nodes, weights, 0, atom_count, n, k, compensated, out,
               comp.data());
}

void moment_sum_parallel(const double* nodes, const double* weights,
                         int atom_count, int n, int k, double* out,
                         int threads) {
#ifndef _OPENMP
  (void)threads;
  moment_sum_serial(nodes, weights, atom_count, n, k, out);
#else
  const bool compensated = atom_count > 64;
  const int chunks = (atom_count + kChunk - 1) / kChunk;
  std::vector<double> partial(static_cast<size_t>(chunks) * n * n, 0.0);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (int cidx = 0; cidx < chunks; ++cidx) {
    const int lo = cidx * kChunk;
    const int hi = std::min(atom_count, lo + kChunk);
    std::vector<double> comp(static_cast<size_t>(n) * n, 0.0);
    moment_block(nodes, weights, lo, hi, n, k, compensated,
                 partial.data() + static_cast<size_t>(cidx) * n * n,
                 comp.data());
  }
  std::fill(out, out + static_cast<size_t>(n) * n, 0.0);
  std::vector<double> comp(static_cast<size_t>(n) * n, 0.0);
  for (int cidx = 0; cidx < chunks; ++cidx)
    for (int ij = 0; ij < n * n; ++ij)
      kahan_add(partial[static_cast<size_t>(cidx) * n * n + ij], out[ij],
                comp[ij]);
#endif
}

void moment_sum(const double* nodes, const double* weights, int atom_count,
                int n, int k, double* out, int threads) {
  if (threads > 1 && atom_count >= 2 * kChunk)
    moment_sum_parallel(nodes, weights, atom_count, n, k, out, threads);
  else
    moment_sum_serial(nodes, weights, atom_count, n, k, out);
}

double spectral_norm(const std::vector<double>& m, int rows, int cols) {
  // Gram matrix M^T M is cols x cols; its top eigenvalue is sigma_max^2.
  std::vector<double> g(static_cast<size_t>(cols) * cols, 0.0);
  for (int i = 0; i < cols; ++i)
    for (int j = i; j < cols; ++j) {
      double s = 0.0;
      for (int r = 0; r < rows; ++r) s += m[r * cols + i] * m[r * cols + j];
      g[i * cols + j] = g[j * cols + i] = s;
    }
  const std::vector<double> ev = sym_eigenvalues(g, cols);
  const double top = ev.empty() ? 0.0 : std::max(0.0, ev.back());
  return std::sqrt(top);
}

std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n) {
  return sym_eigen_serial(a, n).values;
}

bool solve_dense(std::vector<double> m, int n, std::vector<double> b,
                 std::vector<double>& x) {
  double scale = 0.0;
  for (double v : m) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(scale, 1e-300);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[perm[r] * n + col]) > std::abs(m[perm[piv] * n + col]))
        piv = r;
    std::swap(perm[col], perm[piv]);
    const double d = m[perm[col] * n + col];
    if (std::abs(d) < tol) return false;
    for (int r = col + 1; r < n; ++r) {
      const double f = m[perm[r] * n + col] / d;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) m[perm[r] * n + c] -= f * m[perm[col] * n + c];
      b[perm[r]] -= f * b[perm[col]];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[perm[r]];
    for (int c = r + 1; c < n; ++c) s -= m[perm[r] * n + c] * x[c];
    x[r] = s / m[perm[r] * n + r];
  }
  return true;
}

}  // namespace specband::kernels
