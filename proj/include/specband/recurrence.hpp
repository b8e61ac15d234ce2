#pragma once

#include <vector>

#include "specband/bandmatrix.hpp"
#include "specband/initial_conditions.hpp"
#include "specband/vecpoly.hpp"

namespace specband {

// The vector polynomials generated by the band-matrix recurrence: p_1..p_K
// (orthonormal under the matching spectral function) and the inner-boundary
// generators q_1..q_{j0}. Indices are 1-based to match the recurrence rows.
class PolynomialSystem {
 public:
  PolynomialSystem(DegenerationProfile profile,
                   std::vector<VectorPolynomial> p,
                   std::vector<VectorPolynomial> q)
      : profile_(std::move(profile)), p_(std::move(p)), q_(std::move(q)) {}

  const DegenerationProfile& profile() const { return profile_; }
  int p_count() const { return static_cast<int>(p_.size()); }
  int q_count() const { return static_cast<int>(q_.size()); }
  const VectorPolynomial& p(int k) const { return p_[k - 1]; }
  const VectorPolynomial& q(int j) const { return q_[j - 1]; }
  const std::vector<VectorPolynomial>& all_p() const { return p_; }
  const std::vector<VectorPolynomial>& all_q() const { return q_; }

 private:
  DegenerationProfile profile_;
  std::vector<VectorPolynomial> p_;
  std::vector<VectorPolynomial> q_;
};

// Runs the recurrence from the initial vectors T e_1..T e_n, producing one
// new polynomial per row k not hit by a degeneration. At such a row with j
// degenerations passed, the topmost surviving coefficient d_k^(n-j) is
// positive and the solved index is k+n-j, whose height lands exactly n above
// the height of p_k. Coefficients are never normalized, so K is capped
// (growth past 1e150 aborts with ZeroLeadingCoefficient-style diagnostics).
PolynomialSystem generate_p(const BandMatrix& a, const InitialConditions& t,
                            int K);

// Builds the generators q_j from the consumed rows m_j; requires p generated
// through m_{j0} + n - j0. Returned system extends `system` with the q's.
PolynomialSystem generate_q(const BandMatrix& a, PolynomialSystem system);

// True iff every height 0..H is realized by some p_k or some q_j shifted by
// a multiple of n. Callers must have generated far enough that all heights
// <= H are decided.
bool height_coverage_check(const PolynomialSystem& system, long H);

// Values of the system at a set of points, computed by running the
// recurrence on values directly. This sidesteps the monomial coefficient
// blow-up: at spectrum points the value recurrence stays conditioned where
// Horner on the expanded coefficients loses every digit past degree ~20.
// values(k, l) is the n-vector p_k(x_l); generators follow the same layout.
class SystemValues {
 public:
  SystemValues(int n, int p_count, int q_count, int node_count)
      : n_(n),
        p_count_(p_count),
        q_count_(q_count),
        node_count_(node_count),
        p_(static_cast<size_t>(p_count) * node_count * n, 0.0),
        q_(static_cast<size_t>(q_count) * node_count * n, 0.0) {}

  int p_count() const { return p_count_; }
  int q_count() const { return q_count_; }
  int node_count() const { return node_count_; }

  // Pointers to the n-vector value of p_k / q_j at node l (k, j 1-based).
  double* p(int k, int l) {
    return p_.data() + (static_cast<size_t>(k - 1) * node_count_ + l) * n_;
  }
  const double* p(int k, int l) const {
    return p_.data() + (static_cast<size_t>(k - 1) * node_count_ + l) * n_;
  }
  double* q(int j, int l) {
    return q_.data() + (static_cast<size_t>(j - 1) * node_count_ + l) * n_;
  }
  const double* q(int j, int l) const {
    return q_.data() + (static_cast<size_t>(j - 1) * node_count_ + l) * n_;
  }

 private:
  int n_;
  int p_count_;
  int q_count_;
  int node_count_;
  std::vector<double> p_;
  std::vector<double> q_;
};

// Evaluates p_1..p_K (and all generators when with_generators is set) at the
// given points. Nodes are independent, so the loop parallelizes cleanly.
SystemValues evaluate_system(const BandMatrix& a, const InitialConditions& t,
                             int K, const std::vector<double>& nodes,
                             bool with_generators = false, int threads = 1);

}  // namespace specband
