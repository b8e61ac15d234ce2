#include "specband/recurrence.hpp"

#include <cmath>
#include <set>
#include <string>

#include "specband/errors.hpp"

namespace specband {

namespace {

constexpr double kOverflowGuard = 1e150;

// Degenerations passed strictly before row k.
int degenerations_before(const DegenerationProfile& profile, int k) {
  int j = 0;
  while (j < profile.j0() && profile.m[j] < k) ++j;
  return j;
}

}  // namespace

PolynomialSystem generate_p(const BandMatrix& a, const InitialConditions& t,
                            int K) {
  const DegenerationProfile profile = validate(a);
  const int n = a.half_width();
  if (t.dim() != n)
    throw DimensionMismatch("initial conditions dimension != band half-width");
  if (K < n)
    throw InsufficientPrefix("K must cover at least the n initial vectors");

  std::vector<VectorPolynomial> p;
  p.reserve(K);
  for (int k = 0; k < n; ++k)
    p.emplace_back(n, t.column(k));  // degree-0 vectors T e_k

  std::set<int> skip(profile.m.begin(), profile.m.end());

  for (int k = 1; static_cast<int>(p.size()) < K; ++k) {
    if (skip.count(k)) continue;
    const int j = degenerations_before(profile, k);
    const int top = k + n - j;
    if (top <= n) continue;  // already provided by the initial vectors
    if (top > a.size())
      throw InsufficientPrefix("truncation too small to reach index " +
                               std::to_string(top));
    const double lead = a.entry(n - j, k);
    if (!(lead > 0.0))
      throw ZeroLeadingCoefficient("d_" + std::to_string(k) + "^(" +
                                   std::to_string(n - j) +
                                   ") is not positive");

    // z p_k minus everything but the topmost term.
    VectorPolynomial rhs = shift(p[k - 1]);
    rhs = add(rhs, scale(-a.entry(0, k), p[k - 1]));
    for (int i = 0; i < n; ++i) {
      const int idx = k - n + i;
      if (idx < 1) continue;  // left boundary: p vanishes
      rhs = add(rhs, scale(-a.entry(n - i, idx), p[idx - 1]));
    }
    for (int i = 1; i < n - j; ++i)
      rhs = add(rhs, scale(-a.entry(i, k), p[k + i - 1]));

    VectorPolynomial next = scale(1.0 / lead, rhs);
    if (next.max_abs_coeff() > kOverflowGuard)
      throw Error("recurrence coefficients overflowed at index " +
                  std::to_string(top) + "; lower K");

    // Height law: the new polynomial sits exactly n above its source row.
    if (next.height() != Height::of(p[k - 1].height().value() + n))
      throw Error("height law violated at index " + std::to_string(top));

    if (static_cast<int>(p.size()) != top - 1)
      throw Error("recurrence bookkeeping out of step at row " +
                  std::to_string(k));
    p.push_back(std::move(next));
  }

  return PolynomialSystem(profile, std::move(p), {});
}

PolynomialSystem generate_q(const BandMatrix& a, PolynomialSystem system) {
  const DegenerationProfile& profile = system.profile();
  const int n = a.half_width();
  std::vector<VectorPolynomial> q;
  for (int j = 1; j <= profile.j0(); ++j) {
    const int m = profile.m[j - 1];
    if (system.p_count() < m + n - j)
      throw InsufficientPrefix("need p through index " +
                               std::to_string(m + n - j) +
                               " to build generator " + std::to_string(j));
    VectorPolynomial g = shift(system.p(m));
    g = add(g, scale(-a.entry(0, m), system.p(m)));
    for (int k = 0; k < n; ++k) {
      const int idx = m - n + k;
      if (idx < 1) continue;
      g = add(g, scale(-a.entry(n - k, idx), system.p(idx)));
    }
    for (int k = 1; k <= n - j; ++k)
      g = add(g, scale(-a.entry(k, m), system.p(m + k)));

    if (g.height() != Height::of(system.p(m).height().value() + n))
      throw Error("generator height law violated at m_" + std::to_string(j));
    q.push_back(std::move(g));
  }
  return PolynomialSystem(profile, system.all_p(), std::move(q));
}

SystemValues evaluate_system(const BandMatrix& a, const InitialConditions& t,
                             int K, const std::vector<double>& nodes,
                             bool with_generators, int threads) {
  const DegenerationProfile profile = validate(a);
  const int n = a.half_width();
  if (t.dim() != n)
    throw DimensionMismatch("initial conditions dimension != band half-width");
  const int j0 = with_generators ? profile.j0() : 0;
  if (with_generators && K < profile.last_m() + n - profile.j0() && j0 > 0)
    throw InsufficientPrefix("K too small to evaluate every generator");
  const int node_count = static_cast<int>(nodes.size());
  SystemValues out(n, K, j0, node_count);

  std::set<int> skip(profile.m.begin(), profile.m.end());
  (void)threads;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(std::max(1, threads)) \
    if (threads > 1 && node_count > 1)
#endif
  for (int l = 0; l < node_count; ++l) {
    const double x = nodes[l];
    for (int k = 1; k <= std::min(n, K); ++k) {
      const auto col = t.column(k - 1);
      std::copy(col.begin(), col.end(), out.p(k, l));
    }
    for (int k = 1;; ++k) {
      if (skip.count(k)) continue;
      const int j = degenerations_before(profile, k);
      const int top = k + n - j;
      if (top > K) break;
      const double lead = a.entry(n - j, k);
      double* dst = out.p(top, l);
      for (int c = 0; c < n; ++c) {
        double acc = (x - a.entry(0, k)) * out.p(k, l)[c];
        for (int i = 0; i < n; ++i) {
          const int idx = k - n + i;
          if (idx < 1) continue;
          acc -= a.entry(n - i, idx) * out.p(idx, l)[c];
        }
        for (int i = 1; i < n - j; ++i)
          acc -= a.entry(i, k) * out.p(k + i, l)[c];
        dst[c] = acc / lead;
      }
    }
    for (int j = 1; j <= j0; ++j) {
      const int m = profile.m[j - 1];
      double* dst = out.q(j, l);
      for (int c = 0; c < n; ++c) {
        double acc = (x - a.entry(0, m)) * out.p(m, l)[c];
        for (int k = 0; k < n; ++k) {
          const int idx = m - n + k;
          if (idx < 1) continue;
          acc -= a.entry(n - k, idx) * out.p(idx, l)[c];
        }
        for (int k = 1; k <= n - j; ++k)
          acc -= a.entry(k, m) * out.p(m + k, l)[c];
        dst[c] = acc;
      }
    }
  }
  return out;
}

bool height_coverage_check(const PolynomialSystem& system, long H) {
  const int n = system.profile().n;
  std::set<long> covered;
  for (const auto& p : system.all_p()) {
    const Height h = p.height();
    if (!h.is_bottom() && h.value() <= H) covered.insert(h.value());
  }
  for (const auto& q : system.all_q()) {
    const Height h = q.height();
    if (h.is_bottom()) continue;
    for (long v = h.value(); v <= H; v += n) covered.insert(v);
  }
  for (long s = 0; s <= H; ++s)
    if (!covered.count(s)) return false;
  return true;
}

}  // namespace specband
