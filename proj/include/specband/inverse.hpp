#pragma once

#include <vector>

#include "specband/bandmatrix.hpp"
#include "specband/initial_conditions.hpp"
#include "specband/measure.hpp"
#include "specband/vecpoly.hpp"

namespace specband {

// A zero-norm vector polynomial found during reconstruction. Generators
// found while orthonormal vectors were still missing witness degenerations
// of the reconstructed matrix; the ones found at or after rank exhaustion
// only mark that the finite-support measure ran out of dimensions.
struct NullGenerator {
  VectorPolynomial poly;
  long height = 0;
  bool pre_exhaustion = false;
};

struct ReconstructionState {
  int n = 0;
  int total_rank = 0;
  int atom_count = 0;
  std::vector<VectorPolynomial> orthonormal;  // the p-tilde family
  // Values of each orthonormal polynomial at the measure's nodes
  // (atom_count * n doubles per polynomial). All inner products are taken
  // here; the coefficient form above is bookkeeping output.
  std::vector<std::vector<double>> values;
  std::vector<long> heights;              // heights of the family
  std::vector<NullGenerator> generators;  // the q-tilde family, in order
  int slots_visited = 0;                  // canonical indices consumed

  int p_count() const { return static_cast<int>(orthonormal.size()); }
  const VectorPolynomial& p(int k) const { return orthonormal[k - 1]; }
  // Generators that witness degenerations (found before exhaustion).
  std::vector<const NullGenerator*> degeneration_generators() const;
};

struct ReconstructionOptions {
  int k_max = 64;          // cap on orthonormal polynomials
  double eps_zero = 1e-8;  // relative zero-class threshold
  // Re-verify that every skipped canonical slot is in the zero class.
  bool verify_skips = false;
  int threads = 1;
};

// Gram-Schmidt over the canonical height ladder with one
// re-orthogonalization pass before every zero/nonzero decision. Canonical
// index k is skipped outright when k-1 lands on the height of an earlier
// generator shifted by a positive multiple of n: those slots are zero-norm
// automatically. Stops after k_max orthonormal polynomials or at the n-th
// generator, which signals that a finite-support measure is exhausted.
// Throws ToleranceAmbiguous when a squared norm falls between eps^2 and
// 100 eps^2 of the candidate's scale.
//
// The candidate at height s >= n is z * p(height s-n) rather than the raw
// monomial e_{s+1}: the two orthogonalize to the same polynomial (the
// monomial differs from it by lower-height terms and a positive factor),
// but the raw monomial ladder is exponentially ill-conditioned in floating
// point past degree ~20 while this one stays tame at any size.
ReconstructionState gram_schmidt_reconstruct(
    const MatrixMeasure& sigma, const ReconstructionOptions& options = {});

// The symmetric table c_{lk} = <p_l, z p_k>. Rows (and columns) up to
// certified_rows have all their in-band partners inside the table; entries
// beyond that are still correct inner products but the corresponding
// recurrence rows are incomplete.
struct CoefficientTable {
  int n = 0;
  int size = 0;            // table is size x size
  int certified_rows = 0;  // size - n
  std::vector<double> c;   // row-major
  double symmetry_deviation = 0.0;  // max |c - c^t| before averaging
  double max_abs = 0.0;             // over certified rows
  double max_out_of_band = 0.0;     // |c_lk| with |l-k| > n

  double at(int l, int k) const {
    return c[static_cast<size_t>(l - 1) * size + (k - 1)];
  }
};

CoefficientTable recover_coefficients(const ReconstructionState& state,
                                      const MatrixMeasure& sigma,
                                      int threads = 1);

struct AssembledMatrix {
  BandMatrix matrix;
  DegenerationProfile profile;
  int certified_rows = 0;
  double band_tolerance = 0.0;
};

// Reads the diagonals d_k^(i) = c_{k+i,k} out of the table, rounds entries
// below 1e-8 * max|c| to exact zero, and validates the class pattern.
// Wraps pattern failures in ClassViolation: either the tolerances are
// misconfigured or the measure is outside the theory.
AssembledMatrix assemble_matrix(const CoefficientTable& table, int n);

// Degeneration indices recovered from generator heights: m_j is the index
// of the orthonormal polynomial sitting n below generator j.
std::vector<int> detect_degenerations(const ReconstructionState& state);

// The first n orthonormal polynomials are constant vectors forming an upper
// triangular matrix with positive diagonal; that matrix is the initial
// condition realizing the measure as a spectral function.
InitialConditions extract_T(const ReconstructionState& state);

// Independent check of the flow chart built from moments only: in-order
// factorization of the Gram matrix of e_1..e_K. Zero pivots land exactly on
// the slots where the flow chart recorded a generator or skipped, and the
// surviving rows reproduce the orthonormal family.
struct CholeskyOracleResult {
  std::vector<VectorPolynomial> orthonormal;
  std::vector<int> zero_pivot_slots;  // 1-based canonical indices
};

CholeskyOracleResult cholesky_oracle(const MatrixMeasure& sigma, int K,
                                     double eps_zero = 1e-8, int threads = 1);

// ceil(2 h(p_last) / n): the moment order through which a truncation of
// this many polynomials pins the measure.
long certified_moment_order(const ReconstructionState& state);

}  // namespace specband
