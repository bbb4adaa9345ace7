#pragma once

#include <string>
#include <vector>

#include "laxwb/exactnum/scalar.hpp"

namespace laxwb {

/// Truncated Laurent series sum_{e >= start} c_e t^e + O(t^precision).
///
/// Coefficients at exponents >= precision are unknown. A nonzero series keeps
/// its first stored coefficient nonzero, so valuation() is exact; a series
/// whose known coefficients all vanish reports valuation() == precision(),
/// the best available lower bound.
class LaurentSeries {
 public:
  /// The zero series known up to (excluding) t^precision.
  explicit LaurentSeries(int precision = 0) : start_(precision), precision_(precision) {}
  LaurentSeries(int start, std::vector<Scalar> coeffs, int precision);

  static LaurentSeries monomial(const Scalar& c, int exponent, int precision);

  int precision() const { return precision_; }
  int valuation() const { return start_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^e; throws InsufficientPrecision if e >= precision.
  Scalar coeff(int e) const;
  const Scalar& leading() const;
  /// Stored coefficients starting at valuation().
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Drop everything at exponents >= prec (prec may not exceed precision()).
  LaurentSeries truncated(int prec) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const Scalar& c);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  /// Equal coefficients and equal precision.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();

  int start_;
  std::vector<Scalar> coeffs_;
  int precision_;
};

LaurentSeries ls_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_neg(const LaurentSeries& a);
/// Multiplicative inverse; throws ZeroLeadingCoefficient if a is zero up to
/// its precision.
LaurentSeries ls_invert(const LaurentSeries& a);
/// Term-wise d/dt; precision drops by one.
LaurentSeries ls_derivative(const LaurentSeries& a);
/// Coefficient of t^-1; throws InsufficientPrecision when precision <= -1.
Scalar ls_residue(const LaurentSeries& a);

}  // namespace laxwb
