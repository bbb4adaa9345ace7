#pragma once

#include <string>

#include "laxwb/exactnum/polynomial.hpp"

namespace laxwb {

/// numerator / denominator over Q(i), kept canonical: denominator monic and
/// coprime to the numerator; zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Scalar(1)) {}
  RationalFunction(Scalar c) : num_(std::move(c)), den_(Scalar(1)) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Scalar(1)) {}  // NOLINT
  /// Throws std::domain_error when the denominator is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Scalar& c);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction derivative() const;

  std::string str(const std::string& var = "x") const;

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace laxwb
