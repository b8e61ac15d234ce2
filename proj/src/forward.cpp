#include "specband/forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specband/errors.hpp"
#include "specband/kernels.hpp"
#include "specband/recurrence.hpp"

namespace specband {

EigenDecomposition eigensolve(const std::vector<double>& dense, int N,
                              int threads) {
  if (dense.size() != static_cast<size_t>(N) * N)
    throw DimensionMismatch("eigensolve: dense matrix is not N x N");
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (dense[i * N + j] != dense[j * N + i])
        throw FormatError("eigensolve: input is not symmetric");
  kernels::SymEigen raw = kernels::sym_eigen(dense, N, threads);
  EigenDecomposition out;
  out.size = N;
  out.values = std::move(raw.values);
  out.vectors = std::move(raw.vectors);
  return out;
}

std::vector<double> alpha_coefficients(const std::vector<double>& eigenvector,
                                       const InitialConditions& t) {
  return t.solve_transposed(eigenvector);
}

std::vector<SpectralJump> spectral_jumps(const BandMatrix& a,
                                         const InitialConditions& t, int N,
                                         int threads) {
  const int n = a.half_width();
  const DegenerationProfile profile = validate(a);
  if (N < profile.convention_bound())
    throw DimensionMismatch("N must be >= n0+m_{j0} = " +
                            std::to_string(profile.convention_bound()));
  if (t.dim() != n)
    throw DimensionMismatch("initial conditions dimension != half-width");

  const EigenDecomposition eig = eigensolve(a.dense(N), N, threads);

  const double spread = eig.values.back() - eig.values.front();
  const double cluster_tol =
      1e-8 * (spread > 0.0 ? spread
                           : std::max(1.0, std::abs(eig.values.front())));

  std::vector<SpectralJump> jumps;
  for (int l = 0; l < N; ++l) {
    std::vector<double> head(n);
    for (int i = 0; i < n; ++i) head[i] = eig.vectors[i * N + l];
    const std::vector<double> alpha = alpha_coefficients(head, t);

    if (jumps.empty() || eig.values[l] - jumps.back().x > cluster_tol) {
      SpectralJump j;
      j.x = eig.values[l];
      j.weight.assign(static_cast<size_t>(n) * n, 0.0);
      jumps.push_back(std::move(j));
    }
    SpectralJump& j = jumps.back();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) j.weight[r * n + c] += alpha[r] * alpha[c];
    j.alphas.push_back(alpha);
  }
  return jumps;
}

MatrixMeasure spectral_function(const BandMatrix& a,
                                const InitialConditions& t, int N,
                                int threads) {
  const auto jumps = spectral_jumps(a, t, N, threads);
  std::vector<Atom> atoms;
  atoms.reserve(jumps.size());
  for (const auto& j : jumps) atoms.push_back({j.x, j.weight});
  return MatrixMeasure(a.half_width(), std::move(atoms));
}

std::vector<MomentStabilizationRow> moment_stabilization(
    const BandMatrix& a, const InitialConditions& t, int k,
    const std::vector<int>& sizes, int threads) {
  const int n = a.half_width();
  std::vector<MomentStabilizationRow> rows;
  for (int N : sizes) {
    MomentStabilizationRow row;
    row.N = N;
    const MatrixMeasure sigma = spectral_function(a, t, N, threads);
    row.s_k = moment(sigma, k, threads);
    const PolynomialSystem system = generate_p(a.truncate(N), t, N);
    row.p_height = system.p(N).height().value();
    // Stabilization horizon from the truncation size: moments up to
    // ceil(2 h(p_N) / n) agree with every larger truncation.
    row.expected_stable = k <= (2 * row.p_height + n - 1) / n;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace specband
