#pragma once

#include <vector>

namespace specband {

// Upper-triangular invertible matrix fixing the first n polynomials of the
// recurrence. Entry (j, i) is t_{ji}; everything below the diagonal must be
// exactly zero and no diagonal entry may vanish.
class InitialConditions {
 public:
  explicit InitialConditions(int n, std::vector<double> rows);  // row-major n*n

  static InitialConditions identity(int n);

  int dim() const { return n_; }
  double entry(int j, int i) const { return t_[static_cast<size_t>(j) * n_ + i]; }
  const std::vector<double>& data() const { return t_; }

  // Solves T^t alpha = head for alpha (forward substitution).
  std::vector<double> solve_transposed(const std::vector<double>& head) const;

  // Column image T e_k (0-based k), i.e. the k-th initial vector.
  std::vector<double> column(int k) const;

 private:
  int n_;
  std::vector<double> t_;
};

}  // namespace specband
