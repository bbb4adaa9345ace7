#pragma once

#include <string>
#include <utility>
#include <vector>

#include "laxwb/exactnum/scalar.hpp"

namespace laxwb {

/// Dense univariate polynomial over Q(i); coefficients stored low degree first,
/// trailing zeros trimmed so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial x() { return monomial(Scalar(1), 1); }
  static Polynomial monomial(Scalar c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int k) const;
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Exact quotient; the caller guarantees divisibility.
  Polynomial exact_div(const Polynomial& divisor) const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& at) const;
  /// p(x + c), computed exactly.
  Polynomial shifted(const Scalar& c) const;
  Polynomial monic() const;
  Polynomial pow(int e) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace laxwb
