#include "specband/random_members.hpp"

#include <algorithm>
#include <string>

#include "specband/errors.hpp"

namespace specband {

std::uint64_t Rng::next() {
  // splitmix64; stable across standard libraries, unlike the distribution
  // adaptors.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

BandMatrix random_member(int n, int N, const std::vector<int>& m, Rng& rng) {
  const int j0 = static_cast<int>(m.size());
  if (j0 > n - 1)
    throw TooManyDegenerations("at most n-1 degeneration indices");
  for (int j = 0; j < j0; ++j) {
    const int prev = j == 0 ? 0 : m[j - 1];
    if (m[j] < prev + 2 || (j == 0 && m[0] < 2))
      throw BadGap(prev, m[j]);
  }
  const int n0 = n - j0;

  std::vector<std::vector<double>> diagonals(n + 1);
  diagonals[0].resize(N);
  for (int k = 0; k < N; ++k) diagonals[0][k] = rng.uniform(-2.0, 2.0);

  for (int i = 1; i <= n; ++i) {
    const int len = std::max(0, N - i);
    diagonals[i].resize(len);
    const int j = n - i;  // degeneration ordinal of this diagonal
    for (int k = 1; k <= len; ++k) {
      double v;
      if (i < n0) {
        v = rng.uniform(-2.0, 2.0);  // inside the surviving band: free
      } else {
        const int m_lo = j == 0 ? 0 : m[j - 1];        // free through here
        const int m_hi = j < j0 ? m[j] : N + i + 1;    // zero from here on
        if (k <= m_lo)
          v = rng.uniform(-2.0, 2.0);
        else if (k < m_hi)
          v = rng.uniform(0.5, 2.0);
        else
          v = 0.0;
      }
      diagonals[i][k - 1] = v;
    }
  }
  return BandMatrix(n, N, std::move(diagonals));
}

InitialConditions random_initial_conditions(int n, Rng& rng) {
  std::vector<double> rows(static_cast<size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    rows[static_cast<size_t>(j) * n + j] = rng.uniform(0.5, 2.0);
    for (int i = j + 1; i < n; ++i)
      rows[static_cast<size_t>(j) * n + i] = rng.uniform(-1.0, 1.0);
  }
  return InitialConditions(n, std::move(rows));
}

std::vector<int> random_profile(int n, int N, int j0, Rng& rng) {
  if (j0 > n - 1)
    throw TooManyDegenerations("at most n-1 degeneration indices");
  std::vector<int> m;
  int prev = 0;
  for (int j = 0; j < j0; ++j) {
    // Leave room for the remaining indices and for a certifiable tail.
    const int lo = prev + 2;
    const int hi = std::max(lo, N - n - 2 - 2 * (j0 - 1 - j));
    m.push_back(rng.uniform_int(lo, hi));
    prev = m.back();
  }
  return m;
}

}  // namespace specband
