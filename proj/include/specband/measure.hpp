#pragma once

#include <vector>

#include "specband/initial_conditions.hpp"
#include "specband/vecpoly.hpp"

namespace specband {

// One growth point of a matrix-valued step function: node x with an n x n
// symmetric PSD jump.
struct Atom {
  double x;
  std::vector<double> weight;  // row-major n*n
};

// Finite list of atoms with strictly increasing nodes. Construction
// symmetrizes the weights (rejecting asymmetry beyond 1e-12 of the scale),
// sorts by node, and merges atoms at exactly equal nodes by summing their
// weights. Positive semidefiniteness is checked by validate_measure, not
// here, so that diagnostics can name the offending atom.
class MatrixMeasure {
 public:
  MatrixMeasure(int n, std::vector<Atom> atoms);

  int dim() const { return n_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom(int l) const { return atoms_[l]; }

  // Flat views used by the kernels.
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights_flat() const { return weights_; }

  // Numerical rank of every jump (eigenvalues above 1e-10 * trace), summed.
  int total_rank() const;

 private:
  int n_;
  std::vector<Atom> atoms_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

struct MeasureDiagnostics {
  double s0_condition = 0.0;
  int total_rank = 0;
  bool rank_sufficient = true;
  double max_asymmetry = 0.0;
  double min_weight_eigenvalue = 0.0;
};

// Verifies PSD weights and invertibility of the zeroth moment; reports the
// condition number and whether the summed ranks reach the requested count.
// Throws NonPSDWeight / SingularS0.
MeasureDiagnostics validate_measure(const MatrixMeasure& sigma,
                                    int required_rank_points);

// sum_l x_l^k W_l (row-major n*n).
std::vector<double> moment(const MatrixMeasure& sigma, int k, int threads = 1);

// Moments S_0..S_K packaged together.
struct MomentSequence {
  int n = 0;
  std::vector<std::vector<double>> s;  // s[k], row-major n*n
};

MomentSequence moments_upto(const MatrixMeasure& sigma, int K, int threads = 1);

// sum_l r(x_l)^T W_l s(x_l) — the L2(R, sigma) pairing; bilinear and
// symmetric (real arithmetic throughout).
double inner(const VectorPolynomial& r, const VectorPolynomial& s,
             const MatrixMeasure& sigma, int threads = 1);

double norm(const VectorPolynomial& r, const MatrixMeasure& sigma,
            int threads = 1);

// Scale against which zero-class decisions are made:
//   sum_l ||r|_abs(|x_l|)||^2 * ||W_l||_2,
// where r|_abs evaluates with absolute coefficients. Invariant under scaling
// of either the measure or the polynomial, and insensitive to the
// cancellation that makes true zero-class evaluations collapse.
double zero_class_scale(const VectorPolynomial& r, const MatrixMeasure& sigma);

bool is_zero_class(const VectorPolynomial& r, const MatrixMeasure& sigma,
                   double eps_zero = 1e-8);

// sigma_T: every weight W -> T W T^t, nodes unchanged.
MatrixMeasure conjugate_by_T(const MatrixMeasure& sigma,
                             const InitialConditions& t);

}  // namespace specband
