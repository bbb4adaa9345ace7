#include "laxwb/curve/field_element.hpp"

#include <stdexcept>

#include "laxwb/errors.hpp"

namespace laxwb {

FieldElement::FieldElement(Curve curve, RationalFunction a, RationalFunction b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {
  if (curve_.genus() == 0 && !b_.is_zero()) throw std::logic_error("genus-0 function with a y-component");
}

FieldElement FieldElement::coordinate(const Curve& curve) {
  return FieldElement(curve, RationalFunction(Polynomial::x()));
}

FieldElement FieldElement::y(const Curve& curve) {
  return FieldElement(curve, RationalFunction(), RationalFunction(Scalar(1)));
}

bool FieldElement::is_constant() const {
  return b_.is_zero() && a_.num().is_constant() && a_.den().is_constant();
}

FieldElement FieldElement::operator-() const { return FieldElement(curve_, -a_, -b_); }

FieldElement operator+(const FieldElement& f, const FieldElement& g) {
  return FieldElement(f.curve_, f.a_ + g.a_, f.b_ + g.b_);
}

FieldElement operator-(const FieldElement& f, const FieldElement& g) {
  return FieldElement(f.curve_, f.a_ - g.a_, f.b_ - g.b_);
}

FieldElement operator*(const FieldElement& f, const FieldElement& g) {
  if (f.b_.is_zero() && g.b_.is_zero()) return FieldElement(f.curve_, f.a_ * g.a_);
  if (f.b_.is_zero()) return FieldElement(f.curve_, f.a_ * g.a_, f.a_ * g.b_);
  if (g.b_.is_zero()) return FieldElement(f.curve_, f.a_ * g.a_, f.b_ * g.a_);
  const RationalFunction cubic(f.curve_.cubic());
  return FieldElement(f.curve_, f.a_ * g.a_ + f.b_ * g.b_ * cubic, f.a_ * g.b_ + f.b_ * g.a_);
}

FieldElement operator*(const FieldElement& f, const Scalar& c) {
  return FieldElement(f.curve_, f.a_ * c, f.b_ * c);
}

FieldElement operator/(const FieldElement& f, const FieldElement& g) { return f * g.inverse(); }

RationalFunction FieldElement::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * RationalFunction(curve_.cubic());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ZeroElement("inverse of the zero function");
  if (b_.is_zero()) return FieldElement(curve_, a_.inverse());
  const RationalFunction inv_norm = norm().inverse();
  return FieldElement(curve_, a_ * inv_norm, -b_ * inv_norm);
}

FieldElement FieldElement::conjugate() const { return FieldElement(curve_, a_, -b_); }

FieldElement FieldElement::derivative() const {
  if (curve_.genus() == 0 || b_.is_zero()) {
    if (curve_.genus() == 0) return FieldElement(curve_, a_.derivative());
    return FieldElement(curve_, RationalFunction(), a_.derivative());
  }
  const Polynomial& cubic = curve_.cubic();
  const RationalFunction first = b_.derivative() * RationalFunction(cubic) +
                                 b_ * RationalFunction(cubic.derivative()) * Scalar::rational(1, 2);
  return FieldElement(curve_, first, a_.derivative());
}

std::string FieldElement::str() const {
  const std::string var = curve_.coordinate_name();
  if (b_.is_zero()) return a_.str(var);
  const std::string ypart = b_ == RationalFunction(Scalar(1)) ? "y" : "(" + b_.str(var) + ")*y";
  if (a_.is_zero()) return ypart;
  return a_.str(var) + " + " + ypart;
}

int Divisor::operator[](const CurvePoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::set(const CurvePoint& p, int c) {
  if (c == 0) terms_.erase(p);
  else terms_[p] = c;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, c] : terms_) d += c;
  return d;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, c] : b.terms_) r.add(p, c);
  return r;
}

std::string Divisor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + p.str();
  }
  return out;
}

}  // namespace laxwb
