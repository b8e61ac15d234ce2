#pragma once

#include <cstddef>
#include <vector>

namespace specband::kernels {

// Dense symmetric eigendecomposition by cyclic Jacobi rotations.
//
// Two implementations are kept side by side:
//   * sym_eigen_serial   — textbook cyclic-by-row sweeps, the reference;
//   * sym_eigen_parallel — tournament ordering, N/2 disjoint rotations per
//     round applied in two write-disjoint phases (rows, then columns), so
//     the result is bitwise independent of the thread count.
//
// Both sweep until the off-diagonal Frobenius mass drops below
// 1e-14 * ||A||_F, capped at 100 sweeps (throws NoConvergence past the cap).
// Eigenvalues come back in ascending order; each eigenvector is stored as a
// column of `vectors` (row-major N x N) with its first significant entry
// made positive.

struct SymEigen {
  std::vector<double> values;
  std::vector<double> vectors;  // vectors[i*N + l] = component i of vector l
  int sweeps = 0;
};

SymEigen sym_eigen_serial(const std::vector<double>& a, int n);
SymEigen sym_eigen_parallel(const std::vector<double>& a, int n, int threads);

// Dispatch: threads <= 1 or small n runs the serial reference.
SymEigen sym_eigen(const std::vector<double>& a, int n, int threads = 1);

// Weighted accumulation over measure atoms:
//   sum_l  lhs[l*n .. l*n+n) ^T * W_l * rhs[l*n .. l*n+n)
// with W stored as `atoms` flat blocks of n*n row-major doubles.
// The serial version is a plain loop; the parallel version reduces fixed-size
// chunks and combines partials in chunk order, so it too is deterministic.
double weighted_dot_serial(const double* lhs, const double* rhs,
                           const double* weights, int atom_count, int n);
double weighted_dot_parallel(const double* lhs, const double* rhs,
                             const double* weights, int atom_count, int n,
                             int threads);
double weighted_dot(const double* lhs, const double* rhs,
                    const double* weights, int atom_count, int n,
                    int threads = 1);

// sum_l x_l^k * W_l, written into `out` (n*n). Compensated summation keeps
// high powers meaningful once the atom count is large.
void moment_sum_serial(const double* nodes, const double* weights,
                       int atom_count, int n, int k, double* out);
void moment_sum_parallel(const double* nodes, const double* weights,
                         int atom_count, int n, int k, double* out,
                         int threads);
void moment_sum(const double* nodes, const double* weights, int atom_count,
                int n, int k, double* out, int threads = 1);

// --- small dense helpers (row-major) ---

// Largest singular value via the symmetric eigensolve of M^T M.
double spectral_norm(const std::vector<double>& m, int rows, int cols);

// Eigenvalues only, ascending (symmetric input).
std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n);

// Solve M x = b by Gaussian elimination with partial pivoting.
// Returns false when a pivot falls below 1e-12 * max|M|.
bool solve_dense(std::vector<double> m, int n, std::vector<double> b,
                 std::vector<double>& x);

}  // namespace specband::kernels
