#include "specband/bandmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "specband/errors.hpp"
#include "specband/kernels.hpp"

namespace specband {

BandMatrix::BandMatrix(int n, int N, std::vector<std::vector<double>> diagonals)
    : n_(n), size_(N), diagonals_(std::move(diagonals)) {
  if (n < 1 || N < 1) throw DimensionMismatch("band matrix needs n >= 1, N >= 1");
  if (diagonals_.size() != static_cast<size_t>(n) + 1)
    throw DimensionMismatch("expected n+1 diagonals");
  for (int i = 0; i <= n_; ++i) {
    const int expect = std::max(0, size_ - i);
    if (diagonals_[i].size() != static_cast<size_t>(expect))
      throw DimensionMismatch("diagonal " + std::to_string(i) +
                              " must hold N-i entries");
    for (double v : diagonals_[i])
      if (!std::isfinite(v))
        throw FormatError("band matrix entries must be finite");
  }
}

double BandMatrix::entry(int i, int k) const {
  if (i < 0 || i > n_) return 0.0;
  if (k < 1 || k > size_ - i) return 0.0;
  return diagonals_[i][k - 1];
}

double BandMatrix::dense_entry(int row, int col) const {
  if (row > col) std::swap(row, col);
  return entry(col - row, row);
}

std::vector<double> BandMatrix::dense(int N) const {
  if (N > size_) throw DimensionMismatch("dense: N exceeds stored size");
  std::vector<double> a(static_cast<size_t>(N) * N, 0.0);
  for (int r = 1; r <= N; ++r)
    for (int c = r; c <= std::min(N, r + n_); ++c) {
      const double v = entry(c - r, r);
      a[static_cast<size_t>(r - 1) * N + (c - 1)] = v;
      a[static_cast<size_t>(c - 1) * N + (r - 1)] = v;
    }
  return a;
}

BandMatrix BandMatrix::truncate(int N) const {
  if (N > size_) throw DimensionMismatch("truncate: N exceeds stored size");
  std::vector<std::vector<double>> diags(n_ + 1);
  for (int i = 0; i <= n_; ++i) {
    const int len = std::max(0, N - i);
    diags[i].assign(diagonals_[i].begin(), diagonals_[i].begin() + len);
  }
  return BandMatrix(n_, N, std::move(diags));
}

DegenerationProfile validate(const BandMatrix& a) {
  const int n = a.half_width();
  const int N = a.size();
  DegenerationProfile profile;
  profile.n = n;

  int m_prev = 0;  // m_0 = 0
  for (int j = 0; j < n; ++j) {
    const int diag = n - j;
    const int len = N - diag;
    // Scan past the previous degeneration for the first zero.
    int first_zero = 0;  // 0: none found
    for (int k = m_prev + 1; k <= len; ++k) {
      const double v = a.entry(diag, k);
      if (v == 0.0) {
        first_zero = k;
        break;
      }
      if (v < 0.0)
        throw BadSignPattern(diag, k, "negative entry where the class "
                                      "demands a positive run");
    }
    if (first_zero == 0) {
      // Positive through the truncation: non-degenerating, pattern ends.
      return profile;
    }
    if (j + 1 >= n)
      throw TooManyDegenerations(
          "diagonal 1 degenerates; the class admits at most n-1 "
          "degenerations");
    if (first_zero == 1)
      throw BadSignPattern(diag, 1, "first entry of the outermost surviving "
                                    "diagonal must be positive");
    if (first_zero < m_prev + 2) throw BadGap(m_prev, first_zero);
    // Everything from the degeneration on must be exactly zero.
    for (int k = first_zero + 1; k <= len; ++k)
      if (a.entry(diag, k) != 0.0)
        throw BadSignPattern(diag, k,
                             "nonzero entry after the degeneration index " +
                                 std::to_string(first_zero));
    profile.m.push_back(first_zero);
    m_prev = first_zero;
  }
  return profile;  // unreachable: the loop exits via return or throw
}

BlockJacobiTail block_jacobi_tail(const BandMatrix& a,
                                  const DegenerationProfile& profile) {
  const int n0 = profile.n0();
  const int offset = n0 + profile.last_m() - 1;
  const int rows = a.size() - offset;
  if (rows < 2 * n0)
    throw TailTooShort("need at least 2*n0 rows past index " +
                       std::to_string(offset));

  BlockJacobiTail tail;
  tail.n0 = n0;
  tail.offset = offset;
  const int blocks = rows / n0;
  for (int bi = 0; bi < blocks; ++bi) {
    std::vector<double> q(static_cast<size_t>(n0) * n0, 0.0);
    for (int r = 0; r < n0; ++r)
      for (int c = 0; c < n0; ++c)
        q[r * n0 + c] =
            a.dense_entry(offset + bi * n0 + r + 1, offset + bi * n0 + c + 1);
    tail.q.push_back(std::move(q));
    if (bi == 0) continue;
    std::vector<double> b(static_cast<size_t>(n0) * n0, 0.0);
    for (int r = 0; r < n0; ++r)
      for (int c = 0; c < n0; ++c)
        b[r * n0 + c] = a.dense_entry(offset + bi * n0 + r + 1,
                                      offset + (bi - 1) * n0 + c + 1);
    tail.b.push_back(std::move(b));
  }
  return tail;
}

std::vector<double> carleman_report(const BlockJacobiTail& tail) {
  std::vector<double> sums;
  double acc = 0.0;
  for (const auto& b : tail.b) {
    const double norm = kernels::spectral_norm(b, tail.n0, tail.n0);
    acc += norm > 0.0 ? 1.0 / norm : 0.0;
    sums.push_back(acc);
  }
  return sums;
}

std::vector<MirzoevRecord> mirzoev_report(const BlockJacobiTail& tail) {
  const int n0 = tail.n0;
  std::vector<MirzoevRecord> records;
  for (size_t k = 0; k < tail.q.size(); ++k) {
    MirzoevRecord rec;
    // Invert Q_k column by column.
    std::vector<double> qinv(static_cast<size_t>(n0) * n0, 0.0);
    bool ok = true;
    for (int c = 0; c < n0 && ok; ++c) {
      std::vector<double> e(n0, 0.0), x;
      e[c] = 1.0;
      ok = kernels::solve_dense(tail.q[k], n0, e, x);
      if (ok)
        for (int r = 0; r < n0; ++r) qinv[r * n0 + c] = x[r];
    }
    rec.invertible = ok;
    if (ok) {
      rec.q_inverse_norm = kernels::spectral_norm(qinv, n0, n0);
      if (k < tail.b.size()) {
        auto mul = [&](bool transpose_b) {
          std::vector<double> p(static_cast<size_t>(n0) * n0, 0.0);
          for (int r = 0; r < n0; ++r)
            for (int c = 0; c < n0; ++c) {
              double s = 0.0;
              for (int t = 0; t < n0; ++t)
                s += qinv[r * n0 + t] * (transpose_b ? tail.b[k][c * n0 + t]
                                                     : tail.b[k][t * n0 + c]);
              p[r * n0 + c] = s;
            }
          return kernels::spectral_norm(p, n0, n0);
        };
        rec.q_inverse_b_norms = mul(false) + mul(true);
      }
    }
    records.push_back(rec);
  }
  return records;
}

}  // namespace specband
