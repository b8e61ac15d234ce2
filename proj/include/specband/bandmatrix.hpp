#pragma once

#include <vector>

namespace specband {

// Degeneration pattern of a band matrix: the indices m_1 < m_2 < ... at
// which the outermost surviving diagonal turns identically zero. m entries
// are 1-based row indices, as printed in reports. n0 = n - j0 is the
// half-width of the surviving tail.
struct DegenerationProfile {
  int n = 0;
  std::vector<int> m;  // strictly increasing, m[0] > 1, gaps >= 2

  int j0() const { return static_cast<int>(m.size()); }
  int n0() const { return n - j0(); }
  // Last degeneration index, 0 when none (the paper's m_0 = 0 convention).
  int last_m() const { return m.empty() ? 0 : m.back(); }
  // Smallest truncation size the spectral constructions accept.
  int convention_bound() const { return n0() + last_m(); }
};

// Symmetric band matrix with half-width n, stored by its upper diagonals:
// diagonal(i)[k-1] = d_k^{(i)} = entry (k, k+i), k = 1..N-i. Symmetry is
// structural; only finite truncations are materialized.
class BandMatrix {
 public:
  BandMatrix(int n, int N, std::vector<std::vector<double>> diagonals);

  int half_width() const { return n_; }
  int size() const { return size_; }

  const std::vector<double>& diagonal(int i) const { return diagonals_[i]; }
  // d_k^{(i)} with 1-based k; zero outside the stored range.
  double entry(int i, int k) const;
  // Dense symmetric entry (row, col), 1-based.
  double dense_entry(int row, int col) const;

  std::vector<double> dense(int N) const;  // row-major N x N
  BandMatrix truncate(int N) const;

 private:
  int n_;
  int size_;
  std::vector<std::vector<double>> diagonals_;  // [i][k-1]
};

// Infers the degeneration profile from the zero/positive pattern of the
// diagonals, enforcing the class rules: on diagonal n-j the entries after
// the previous degeneration must stay strictly positive until the next
// degeneration index, and exactly zero from there on. A diagonal that stays
// positive through the truncation is taken as non-degenerating. Throws
// BadSignPattern / BadGap / TooManyDegenerations.
DegenerationProfile validate(const BandMatrix& a);

// The tail past the last degeneration viewed as a block Jacobi matrix of
// n0 x n0 blocks: Q_k on the block diagonal, B_k below it (upper triangular
// with positive diagonal by the class pattern). Block (a, b) entries are
// taken from the dense tail starting after row n0 + m_{j0} - 1.
struct BlockJacobiTail {
  int n0 = 0;
  int offset = 0;  // rows removed in front of the tail
  std::vector<std::vector<double>> q;  // symmetric n0 x n0, row-major
  std::vector<std::vector<double>> b;  // upper triangular n0 x n0
};

BlockJacobiTail block_jacobi_tail(const BandMatrix& a,
                                  const DegenerationProfile& profile);

// Partial sums sum_{j<=K} 1/||B_j|| (spectral norm). Purely diagnostic:
// no divergence verdict can come out of a finite prefix.
std::vector<double> carleman_report(const BlockJacobiTail& tail);

struct MirzoevRecord {
  double q_inverse_norm = 0.0;       // ||Q_k^{-1}||
  double q_inverse_b_norms = 0.0;    // ||Q_k^{-1} B_k|| + ||Q_k^{-1} B_k^t||
  bool invertible = false;
};

std::vector<MirzoevRecord> mirzoev_report(const BlockJacobiTail& tail);

}  // namespace specband
