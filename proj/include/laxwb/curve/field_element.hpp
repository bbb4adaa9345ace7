#pragma once

#include <map>
#include <string>

#include "laxwb/curve/curve.hpp"
#include "laxwb/exactnum/rational_function.hpp"

namespace laxwb {

/// Meromorphic function a(x) + b(x)*y on a curve; b = 0 in genus 0, where the
/// coordinate is z.
class FieldElement {
 public:
  explicit FieldElement(Curve curve) : curve_(std::move(curve)) {}
  FieldElement(Curve curve, RationalFunction a, RationalFunction b = RationalFunction());

  static FieldElement constant(const Curve& curve, const Scalar& c) { return FieldElement(curve, RationalFunction(c)); }
  /// x (or z in genus 0).
  static FieldElement coordinate(const Curve& curve);
  /// y; throws std::logic_error in genus 0.
  static FieldElement y(const Curve& curve);

  const Curve& curve() const { return curve_; }
  const RationalFunction& a() const { return a_; }
  const RationalFunction& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& f, const FieldElement& g);
  friend FieldElement operator-(const FieldElement& f, const FieldElement& g);
  friend FieldElement operator*(const FieldElement& f, const FieldElement& g);
  friend FieldElement operator*(const FieldElement& f, const Scalar& c);
  friend FieldElement operator/(const FieldElement& f, const FieldElement& g);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  friend bool operator==(const FieldElement& f, const FieldElement& g) { return f.a_ == g.a_ && f.b_ == g.b_; }

  /// Throws ZeroElement for f = 0.
  FieldElement inverse() const;
  /// a - b*y, the image under the hyperelliptic involution.
  FieldElement conjugate() const;
  /// a^2 - b^2 (x^3 + a x + b), a function of x alone.
  RationalFunction norm() const;
  /// df / eta0: a' in genus 0; (b' F + b F'/2) + a' y in genus 1.
  FieldElement derivative() const;

  std::string str() const;

 private:
  Curve curve_;
  RationalFunction a_;
  RationalFunction b_;
};

/// Finitely supported integer combination of points.
class Divisor {
 public:
  Divisor() = default;

  int operator[](const CurvePoint& p) const;
  void set(const CurvePoint& p, int c);
  void add(const CurvePoint& p, int c) { set(p, (*this)[p] + c); }
  int degree() const;
  const std::map<CurvePoint, int>& terms() const { return terms_; }

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend bool operator==(const Divisor&, const Divisor&) = default;
  std::string str() const;

 private:
  std::map<CurvePoint, int> terms_;
};

/// The 1-form f * eta0 with eta0 = dz (genus 0) or dx/y (genus 1).
struct Differential {
  FieldElement f;
};

/// The vector field h / eta0, dual to the reference differential.
struct VectorFieldElement {
  FieldElement h;

  /// Contraction with a differential: (h/eta0)(f eta0) = h f.
  FieldElement pair(const Differential& w) const { return h * w.f; }
  /// Lie derivative of a function: h * df/eta0.
  FieldElement apply(const FieldElement& f) const { return h * f.derivative(); }
};

}  // namespace laxwb
