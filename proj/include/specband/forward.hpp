#pragma once

#include <vector>

#include "specband/bandmatrix.hpp"
#include "specband/initial_conditions.hpp"
#include "specband/measure.hpp"

namespace specband {

// Eigendecomposition of a dense symmetric truncation; values ascending,
// vectors orthonormal columns with the first significant entry positive.
struct EigenDecomposition {
  int size = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // row-major, column l = eigenvector l
};

EigenDecomposition eigensolve(const std::vector<double>& dense, int N,
                              int threads = 1);

// One jump of the spectral function: the eigenvalue, the alpha vector of
// every eigenvector clustered into it, and the assembled PSD jump matrix
// sum alpha alpha^t.
struct SpectralJump {
  double x = 0.0;
  std::vector<std::vector<double>> alphas;
  std::vector<double> weight;  // row-major n x n
};

// First n entries of an eigenvector determine alpha through the triangular
// system v_i = sum_j alpha_j t_{ji}.
std::vector<double> alpha_coefficients(const std::vector<double>& eigenvector,
                                       const InitialConditions& t);

std::vector<SpectralJump> spectral_jumps(const BandMatrix& a,
                                         const InitialConditions& t, int N,
                                         int threads = 1);

// The matrix-valued spectral function of the N x N truncation, as a finite
// atom list. Eigenvalues closer than 1e-8 of the spectral spread merge into
// one jump. Requires N >= n0 + m_{j0}, the smallest size at which the
// generators acquire zero norm.
MatrixMeasure spectral_function(const BandMatrix& a,
                                const InitialConditions& t, int N,
                                int threads = 1);

struct MomentStabilizationRow {
  int N = 0;
  std::vector<double> s_k;       // row-major n x n
  long p_height = 0;             // height of the last recurrence polynomial
  bool expected_stable = false;  // k <= ceil(2 h(p_N) / n)
};

// S_k(T) computed from the truncation at every requested N, with the
// stabilization threshold the theory predicts.
std::vector<MomentStabilizationRow> moment_stabilization(
    const BandMatrix& a, const InitialConditions& t, int k,
    const std::vector<int>& sizes, int threads = 1);

}  // namespace specband
