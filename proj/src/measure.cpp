#include "specband/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specband/errors.hpp"
#include "specband/kernels.hpp"

namespace specband {

InitialConditions::InitialConditions(int n, std::vector<double> rows)
    : n_(n), t_(std::move(rows)) {
  if (n < 1 || t_.size() != static_cast<size_t>(n) * n)
    throw DimensionMismatch("initial conditions must be n x n");
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (t_[static_cast<size_t>(j) * n_ + i] != 0.0)
        throw FormatError("initial conditions must be upper triangular");
  for (int i = 0; i < n_; ++i)
    if (t_[static_cast<size_t>(i) * n_ + i] == 0.0)
      throw FormatError("initial conditions must have nonzero diagonal");
}

InitialConditions InitialConditions::identity(int n) {
  std::vector<double> rows(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i) * n + i] = 1.0;
  return InitialConditions(n, std::move(rows));
}

std::vector<double> InitialConditions::solve_transposed(
    const std::vector<double>& head) const {
  if (head.size() < static_cast<size_t>(n_))
    throw DimensionMismatch("eigenvector head shorter than n");
  // v_i = sum_{j<=i} alpha_j t_{ji}
  std::vector<double> alpha(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = head[i];
    for (int j = 0; j < i; ++j) s -= alpha[j] * entry(j, i);
    alpha[i] = s / entry(i, i);
  }
  return alpha;
}

std::vector<double> InitialConditions::column(int k) const {
  std::vector<double> col(n_, 0.0);
  for (int j = 0; j < n_; ++j) col[j] = entry(j, k);
  return col;
}

MatrixMeasure::MatrixMeasure(int n, std::vector<Atom> atoms) : n_(n) {
  if (n < 1) throw DimensionMismatch("measure dimension must be >= 1");
  for (auto& a : atoms) {
    if (a.weight.size() != static_cast<size_t>(n) * n)
      throw DimensionMismatch("atom weight is not n x n");
    double scale = 0.0, asym = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        scale = std::max(scale, std::abs(a.weight[i * n + j]));
        asym = std::max(asym,
                        std::abs(a.weight[i * n + j] - a.weight[j * n + i]));
      }
    if (asym > 1e-12 * std::max(1.0, scale))
      throw FormatError("atom weight is not symmetric");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = 0.5 * (a.weight[i * n + j] + a.weight[j * n + i]);
        a.weight[i * n + j] = a.weight[j * n + i] = v;
      }
  }
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.x < b.x; });
  for (const auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().x == a.x) {
      for (size_t ij = 0; ij < a.weight.size(); ++ij)
        atoms_.back().weight[ij] += a.weight[ij];
    } else {
      atoms_.push_back(a);
    }
  }
  nodes_.reserve(atoms_.size());
  weights_.reserve(atoms_.size() * n_ * n_);
  for (const auto& a : atoms_) {
    nodes_.push_back(a.x);
    weights_.insert(weights_.end(), a.weight.begin(), a.weight.end());
  }
}

int MatrixMeasure::total_rank() const {
  int rank = 0;
  for (const auto& a : atoms_) {
    double trace = 0.0;
    for (int i = 0; i < n_; ++i) trace += a.weight[i * n_ + i];
    const auto ev = kernels::sym_eigenvalues(a.weight, n_);
    for (double v : ev)
      if (v > 1e-10 * std::max(trace, 1e-300)) ++rank;
  }
  return rank;
}

MeasureDiagnostics validate_measure(const MatrixMeasure& sigma,
                                    int required_rank_points) {
  MeasureDiagnostics diag;
  const int n = sigma.dim();
  diag.min_weight_eigenvalue = 0.0;
  for (int l = 0; l < sigma.atom_count(); ++l) {
    const auto& w = sigma.atom(l).weight;
    double wnorm = 0.0;
    for (double v : w) wnorm = std::max(wnorm, std::abs(v));
    const auto ev = kernels::sym_eigenvalues(w, n);
    const double lo = ev.front();
    diag.min_weight_eigenvalue = std::min(diag.min_weight_eigenvalue, lo);
    if (lo < -1e-10 * std::max(wnorm, 1e-300)) throw NonPSDWeight(l, lo);
  }
  const auto s0 = moment(sigma, 0);
  const auto ev = kernels::sym_eigenvalues(s0, n);
  const double top = std::max(ev.back(), 0.0);
  const double bottom = ev.front();
  if (bottom <= 1e-12 * std::max(top, 1e-300))
    throw SingularS0(bottom > 0.0 ? top / bottom
                                  : std::numeric_limits<double>::infinity());
  diag.s0_condition = top / bottom;
  diag.total_rank = sigma.total_rank();
  diag.rank_sufficient = diag.total_rank >= required_rank_points;
  return diag;
}

std::vector<double> moment(const MatrixMeasure& sigma, int k, int threads) {
  const int n = sigma.dim();
  std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
  kernels::moment_sum(sigma.nodes().data(), sigma.weights_flat().data(),
                      sigma.atom_count(), n, k, out.data(), threads);
  return out;
}

MomentSequence moments_upto(const MatrixMeasure& sigma, int K, int threads) {
  MomentSequence seq;
  seq.n = sigma.dim();
  seq.s.reserve(K + 1);
  for (int k = 0; k <= K; ++k) seq.s.push_back(moment(sigma, k, threads));
  return seq;
}

namespace {

// Evaluate r at every node, concatenated.
std::vector<double> evaluate_at_nodes(const VectorPolynomial& r,
                                      const MatrixMeasure& sigma) {
  const int n = sigma.dim();
  std::vector<double> vals(static_cast<size_t>(sigma.atom_count()) * n);
  for (int l = 0; l < sigma.atom_count(); ++l) {
    const auto v = r.evaluate(sigma.atom(l).x);
    std::copy(v.begin(), v.end(), vals.begin() + static_cast<size_t>(l) * n);
  }
  return vals;
}

}  // namespace

double inner(const VectorPolynomial& r, const VectorPolynomial& s,
             const MatrixMeasure& sigma, int threads) {
  if (r.dim() != sigma.dim() || s.dim() != sigma.dim())
    throw DimensionMismatch("inner: polynomial/measure dimension mismatch");
  const auto rv = evaluate_at_nodes(r, sigma);
  const auto sv = evaluate_at_nodes(s, sigma);
  return kernels::weighted_dot(rv.data(), sv.data(),
                               sigma.weights_flat().data(),
                               sigma.atom_count(), sigma.dim(), threads);
}

double norm(const VectorPolynomial& r, const MatrixMeasure& sigma,
            int threads) {
  return std::sqrt(std::max(0.0, inner(r, r, sigma, threads)));
}

double zero_class_scale(const VectorPolynomial& r,
                        const MatrixMeasure& sigma) {
  const int n = sigma.dim();
  double scale = 0.0;
  for (int l = 0; l < sigma.atom_count(); ++l) {
    // Absolute-coefficient envelope instead of the plain evaluation: a
    // polynomial that vanishes on the nodes only through cancellation must
    // still register a large scale, or round-off would mask the zero class.
    const auto v = r.evaluate_abs(sigma.atom(l).x);
    double v2 = 0.0;
    for (double c : v) v2 += c * c;
    const auto ev = kernels::sym_eigenvalues(sigma.atom(l).weight, n);
    scale += v2 * std::max(std::abs(ev.front()), std::abs(ev.back()));
  }
  return scale;
}

bool is_zero_class(const VectorPolynomial& r, const MatrixMeasure& sigma,
                   double eps_zero) {
  if (r.is_zero()) return true;
  const double q = inner(r, r, sigma);
  return q <= eps_zero * eps_zero * zero_class_scale(r, sigma);
}

MatrixMeasure conjugate_by_T(const MatrixMeasure& sigma,
                             const InitialConditions& t) {
  const int n = sigma.dim();
  if (t.dim() != n)
    throw DimensionMismatch("conjugate_by_T: dimension mismatch");
  std::vector<Atom> atoms;
  atoms.reserve(sigma.atom_count());
  for (const auto& a : sigma.atoms()) {
    std::vector<double> tw(static_cast<size_t>(n) * n, 0.0);
    // T W
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += t.entry(i, k) * a.weight[k * n + j];
        tw[i * n + j] = s;
      }
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    // (T W) T^t
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += tw[i * n + k] * t.entry(j, k);
        out[i * n + j] = s;
      }
    atoms.push_back({a.x, std::move(out)});
  }
  return MatrixMeasure(n, std::move(atoms));
}

}  // namespace specband
