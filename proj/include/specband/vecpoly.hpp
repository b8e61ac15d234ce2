#pragma once

#include <vector>

namespace specband {

// Grading of vector polynomials. An explicit bottom element stands in for
// the height of the zero polynomial; it compares below every integer height
// and refuses arithmetic.
class Height {
 public:
  static Height bottom() { return Height(); }
  static Height of(long v) {
    Height h;
    h.bottom_ = false;
    h.value_ = v;
    return h;
  }

  bool is_bottom() const { return bottom_; }
  long value() const;  // throws Error when bottom

  friend bool operator==(const Height& a, const Height& b) {
    return a.bottom_ == b.bottom_ && (a.bottom_ || a.value_ == b.value_);
  }
  friend bool operator!=(const Height& a, const Height& b) { return !(a == b); }
  friend bool operator<(const Height& a, const Height& b) {
    if (a.bottom_) return !b.bottom_;
    if (b.bottom_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Height& a, const Height& b) {
    return a < b || a == b;
  }
  friend bool operator>(const Height& a, const Height& b) { return b < a; }
  friend bool operator>=(const Height& a, const Height& b) { return b <= a; }

 private:
  bool bottom_ = true;
  long value_ = 0;
};

// An n-dimensional vector whose entries are real scalar polynomials.
// Coefficients are stored per degree: coeff(d, j) is the j-th component
// (0-based) of the z^d coefficient vector. Trailing all-zero degree blocks
// are trimmed eagerly with exact comparison; rounding of numerically
// produced coefficients is the caller's business.
class VectorPolynomial {
 public:
  explicit VectorPolynomial(int n);  // zero polynomial
  VectorPolynomial(int n, std::vector<double> coeffs);  // [deg][component]

  int dim() const { return n_; }
  // Number of stored degree blocks; 0 for the zero polynomial.
  int degree_count() const { return static_cast<int>(coeffs_.size()) / n_; }
  bool is_zero() const { return coeffs_.empty(); }

  double coeff(int degree, int component) const;

  // max over components j (1-based) of n*deg(R_j) + j - 1; bottom for zero.
  Height height() const;

  // Component slot (0-based) holding the height; polynomial must be nonzero.
  int leading_component() const;
  int leading_degree() const;
  double leading_coefficient() const;

  std::vector<double> evaluate(double x) const;  // Horner per component

  // Component-wise sum |coeff| * t^d: an upper envelope of |evaluate| that
  // stays large under cancellation, used to calibrate zero tests.
  std::vector<double> evaluate_abs(double t) const;

  friend VectorPolynomial add(const VectorPolynomial& r,
                              const VectorPolynomial& s);
  friend VectorPolynomial scale(double c, const VectorPolynomial& r);
  friend VectorPolynomial mul_scalar_poly(const std::vector<double>& poly,
                                           const VectorPolynomial& r);
  friend VectorPolynomial shift(const VectorPolynomial& r);  // times z

  friend bool operator==(const VectorPolynomial& a, const VectorPolynomial& b);

  double max_abs_coeff() const;

 private:
  void trim();

  int n_;
  std::vector<double> coeffs_;  // flat, degree-major, length = n_ * blocks
};

VectorPolynomial add(const VectorPolynomial& r, const VectorPolynomial& s);
VectorPolynomial scale(double c, const VectorPolynomial& r);
VectorPolynomial mul_scalar_poly(const std::vector<double>& poly,
                                 const VectorPolynomial& r);
VectorPolynomial shift(const VectorPolynomial& r);

// m = n*k + i with 1 <= i <= n maps to z^k e_i, so the family enumerates
// all heights: height(canonical(m, n)) == m - 1.
VectorPolynomial canonical(int m, int n);

inline Height height(const VectorPolynomial& r) { return r.height(); }

}  // namespace specband
