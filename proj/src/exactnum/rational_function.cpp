#include "laxwb/exactnum/rational_function.hpp"

#include <stdexcept>

namespace laxwb {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Scalar(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (!den_.leading().is_one()) {
    Scalar inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return {a.num_ + b.num_, a.den_, RationalFunction::Canonical{}};
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  if (a.is_polynomial()) {
    return {a.num_ * b.den_ + b.num_, b.den_, RationalFunction::Canonical{}};
  }
  if (b.is_polynomial()) {
    return {a.num_ + b.num_ * a.den_, a.den_, RationalFunction::Canonical{}};
  }
  Polynomial g = gcd(a.den_, b.den_);
  if (g.degree() == 0) {
    // Coprime denominators: the sum is already reduced.
    RationalFunction r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                       RationalFunction::Canonical{});
    if (r.num_.is_zero()) r.den_ = Polynomial(Scalar(1));
    return r;
  }
  Polynomial bq = b.den_.exact_div(g);
  Polynomial aq = a.den_.exact_div(g);
  return RationalFunction(a.num_ * bq + b.num_ * aq, a.den_ * bq);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    return {a.num_ * b.num_, Polynomial(Scalar(1)), RationalFunction::Canonical{}};
  }
  // Cross-cancel so the product needs no further reduction.
  Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0 && an.degree() > 0) {
    Polynomial g = gcd(an, bd);
    if (g.degree() > 0) {
      an = an.exact_div(g);
      bd = bd.exact_div(g);
    }
  }
  if (ad.degree() > 0 && bn.degree() > 0) {
    Polynomial g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = bn.exact_div(g);
      ad = ad.exact_div(g);
    }
  }
  return {an * bn, ad * bd, RationalFunction::Canonical{}};
}

RationalFunction operator*(const RationalFunction& a, const Scalar& c) {
  if (c.is_zero()) return {};
  return {a.num_ * c, a.den_, RationalFunction::Canonical{}};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  Scalar inv = num_.leading().inverse();
  return {den_ * inv, num_ * inv, Canonical{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return {num_.derivative(), den_, Canonical{}};
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace laxwb
