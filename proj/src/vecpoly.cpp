#include "specband/vecpoly.hpp"

#include <algorithm>
#include <cmath>

#include "specband/errors.hpp"

namespace specband {

long Height::value() const {
  if (bottom_) throw Error("height of the zero polynomial has no value");
  return value_;
}

VectorPolynomial::VectorPolynomial(int n) : n_(n) {
  if (n < 1) throw DimensionMismatch("vector polynomial dimension must be >= 1");
}

VectorPolynomial::VectorPolynomial(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1) throw DimensionMismatch("vector polynomial dimension must be >= 1");
  if (coeffs_.size() % static_cast<size_t>(n_) != 0)
    throw DimensionMismatch("coefficient data is not a multiple of n");
  trim();
}

void VectorPolynomial::trim() {
  int blocks = static_cast<int>(coeffs_.size()) / n_;
  while (blocks > 0) {
    bool all_zero = true;
    for (int j = 0; j < n_; ++j)
      if (coeffs_[static_cast<size_t>(blocks - 1) * n_ + j] != 0.0) {
        all_zero = false;
        break;
      }
    if (!all_zero) break;
    --blocks;
  }
  coeffs_.resize(static_cast<size_t>(blocks) * n_);
}

double VectorPolynomial::coeff(int degree, int component) const {
  if (component < 0 || component >= n_)
    throw DimensionMismatch("component out of range");
  if (degree < 0 || degree >= degree_count()) return 0.0;
  return coeffs_[static_cast<size_t>(degree) * n_ + component];
}

Height VectorPolynomial::height() const {
  long best = -1;
  bool found = false;
  const int blocks = degree_count();
  for (int j = 0; j < n_; ++j) {
    for (int d = blocks - 1; d >= 0; --d) {
      if (coeffs_[static_cast<size_t>(d) * n_ + j] != 0.0) {
        const long h = static_cast<long>(n_) * d + j;
        if (!found || h > best) best = h;
        found = true;
        break;
      }
    }
  }
  return found ? Height::of(best) : Height::bottom();
}

int VectorPolynomial::leading_component() const {
  const Height h = height();
  return static_cast<int>(h.value() % n_);
}

int VectorPolynomial::leading_degree() const {
  const Height h = height();
  return static_cast<int>(h.value() / n_);
}

double VectorPolynomial::leading_coefficient() const {
  return coeff(leading_degree(), leading_component());
}

std::vector<double> VectorPolynomial::evaluate(double x) const {
  std::vector<double> out(n_, 0.0);
  const int blocks = degree_count();
  for (int j = 0; j < n_; ++j) {
    double acc = 0.0;
    for (int d = blocks - 1; d >= 0; --d)
      acc = acc * x + coeffs_[static_cast<size_t>(d) * n_ + j];
    out[j] = acc;
  }
  return out;
}

std::vector<double> VectorPolynomial::evaluate_abs(double t) const {
  t = std::abs(t);
  std::vector<double> out(n_, 0.0);
  const int blocks = degree_count();
  for (int j = 0; j < n_; ++j) {
    double acc = 0.0;
    for (int d = blocks - 1; d >= 0; --d)
      acc = acc * t + std::abs(coeffs_[static_cast<size_t>(d) * n_ + j]);
    out[j] = acc;
  }
  return out;
}

double VectorPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

VectorPolynomial add(const VectorPolynomial& r, const VectorPolynomial& s) {
  if (r.n_ != s.n_) throw DimensionMismatch("add: mismatched dimensions");
  const int blocks = std::max(r.degree_count(), s.degree_count());
  std::vector<double> out(static_cast<size_t>(blocks) * r.n_, 0.0);
  for (int d = 0; d < blocks; ++d)
    for (int j = 0; j < r.n_; ++j)
      out[static_cast<size_t>(d) * r.n_ + j] = r.coeff(d, j) + s.coeff(d, j);
  return VectorPolynomial(r.n_, std::move(out));
}

VectorPolynomial scale(double c, const VectorPolynomial& r) {
  std::vector<double> out = r.coeffs_;
  for (double& v : out) v *= c;
  return VectorPolynomial(r.n_, std::move(out));
}

VectorPolynomial mul_scalar_poly(const std::vector<double>& poly,
                                 const VectorPolynomial& r) {
  if (r.is_zero() || poly.empty()) return VectorPolynomial(r.n_);
  const int pb = static_cast<int>(poly.size());
  const int rb = r.degree_count();
  std::vector<double> out(static_cast<size_t>(pb + rb - 1) * r.n_, 0.0);
  for (int a = 0; a < pb; ++a) {
    if (poly[a] == 0.0) continue;
    for (int d = 0; d < rb; ++d)
      for (int j = 0; j < r.n_; ++j)
        out[static_cast<size_t>(a + d) * r.n_ + j] += poly[a] * r.coeff(d, j);
  }
  return VectorPolynomial(r.n_, std::move(out));
}

VectorPolynomial shift(const VectorPolynomial& r) {
  if (r.is_zero()) return r;
  std::vector<double> out(static_cast<size_t>(r.degree_count() + 1) * r.n_, 0.0);
  std::copy(r.coeffs_.begin(), r.coeffs_.end(), out.begin() + r.n_);
  return VectorPolynomial(r.n_, std::move(out));
}

bool operator==(const VectorPolynomial& a, const VectorPolynomial& b) {
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

VectorPolynomial canonical(int m, int n) {
  if (m < 1) throw DimensionMismatch("canonical index must be >= 1");
  const int k = (m - 1) / n;
  const int i = (m - 1) % n;  // 0-based component
  std::vector<double> out(static_cast<size_t>(k + 1) * n, 0.0);
  out[static_cast<size_t>(k) * n + i] = 1.0;
  return VectorPolynomial(n, std::move(out));
}

}  // namespace specband
