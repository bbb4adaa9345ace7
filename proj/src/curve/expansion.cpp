#include "laxwb/curve/expansion.hpp"

#include <algorithm>

#include "laxwb/errors.hpp"

namespace laxwb {

namespace {

bool ramified(const Curve& curve, const CurvePoint& p) {
  return curve.genus() == 1 && !p.is_infinity() && p.y().is_zero();
}

int y_order(const Curve& curve, const CurvePoint& p) {
  if (curve.genus() == 0) return 0;
  if (p.is_infinity()) return -3;
  return p.y().is_zero() ? 1 : 0;
}

int lowest_index(const Polynomial& q) {
  int k = 0;
  while (q.coeff(k).is_zero()) ++k;
  return k;
}

int poly_order(const Curve& curve, const Polynomial& q, const CurvePoint& p) {
  if (q.is_zero()) throw ZeroElement("order of the zero polynomial");
  if (p.is_infinity()) return -q.degree() * (curve.genus() == 1 ? 2 : 1);
  const Polynomial linear(std::vector<Scalar>{-p.x(), Scalar(1)});
  int k = 0;
  for (Polynomial r = q; r.evaluate(p.x()).is_zero(); r = r.exact_div(linear)) ++k;
  return k * (ramified(curve, p) ? 2 : 1);
}

// p(x) expanded at the point, exact through t^(T-1).
LaurentSeries expand_poly(const Curve& curve, const Polynomial& q, const CurvePoint& p, int T) {
  if (q.is_zero()) return LaurentSeries(T);
  if (curve.genus() == 0 && p.is_infinity()) {
    std::vector<Scalar> c(q.coeffs().rbegin(), q.coeffs().rend());
    return LaurentSeries(-q.degree(), std::move(c), T);
  }
  if (!p.is_infinity() && !ramified(curve, p)) {
    return LaurentSeries(0, q.shifted(p.x()).coeffs(), T);
  }
  const Polynomial shifted = p.is_infinity() ? q : q.shifted(p.x());
  const int need = p.is_infinity() ? T + 2 * q.degree() : T - 2 * lowest_index(shifted);
  auto chart = curve.chart(p, need, q.degree());
  LaurentSeries sum(T);
  for (int k = 0; k <= shifted.degree(); ++k) {
    const Scalar& c = shifted.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    sum = sum + (chart->s_powers[static_cast<std::size_t>(k)] * c).truncated(T);
  }
  return sum;
}

LaurentSeries expand_rf(const Curve& curve, const RationalFunction& r, const CurvePoint& p, int T) {
  if (r.is_zero()) return LaurentSeries(T);
  const int vp = poly_order(curve, r.num(), p);
  const int vq = poly_order(curve, r.den(), p);
  if (T <= vp - vq) return LaurentSeries(T);
  const LaurentSeries num = expand_poly(curve, r.num(), p, T + vq);
  if (r.den().is_constant()) return (num * r.den().coeffs()[0].inverse()).truncated(T);
  const LaurentSeries den = expand_poly(curve, r.den(), p, T + 2 * vq - vp);
  return (num * ls_invert(den)).truncated(T);
}

LaurentSeries expand_y(const Curve& curve, const CurvePoint& p, int T) {
  const int vy = y_order(curve, p);
  auto chart = curve.chart(p, T - vy, 1);
  return chart->y.truncated(T);
}

LaurentSeries expand_frame(const Curve& curve, const CurvePoint& p, int T) {
  const int vf = curve.reference_differential_order(p);
  auto chart = curve.chart(p, T - vf, 1);
  return chart->frame.truncated(T);
}

}  // namespace

int order_at(const Curve& curve, const RationalFunction& r, const CurvePoint& p) {
  if (r.is_zero()) throw ZeroElement("order of the zero function");
  return poly_order(curve, r.num(), p) - poly_order(curve, r.den(), p);
}

int order_lower_bound(const FieldElement& f, const CurvePoint& p) {
  if (f.is_zero()) throw ZeroElement("order of the zero function at " + p.str());
  const Curve& curve = f.curve();
  if (f.b().is_zero()) return order_at(curve, f.a(), p);
  const int vb = order_at(curve, f.b(), p) + y_order(curve, p);
  if (f.a().is_zero()) return vb;
  return std::min(order_at(curve, f.a(), p), vb);
}

LaurentSeries expand_at(const FieldElement& f, const CurvePoint& p, int prec) {
  const Curve& curve = f.curve();
  if (!curve.contains(p)) throw ExpansionFailure("point " + p.str() + " is not on " + curve.str());
  LaurentSeries out = expand_rf(curve, f.a(), p, prec);
  if (f.b().is_zero()) return out;
  const int vb = order_at(curve, f.b(), p);
  const int vy = y_order(curve, p);
  if (prec <= vb + vy) return out;
  const LaurentSeries bs = expand_rf(curve, f.b(), p, prec - vy);
  const LaurentSeries ys = expand_y(curve, p, prec - vb);
  return (out + bs * ys).truncated(prec);
}

int order_at(const FieldElement& f, const CurvePoint& p) {
  const int lb = order_lower_bound(f, p);
  if (f.a().is_zero() || f.b().is_zero()) return lb;
  const Curve& curve = f.curve();
  const int va = order_at(curve, f.a(), p);
  const int vb = order_at(curve, f.b(), p) + y_order(curve, p);
  if (va != vb) return lb;
  // ord_P(f) + ord_P(conj f) = ord_P(norm), and ord_P(conj f) = ord_P'(f) >= va.
  const int vn = order_at(curve, f.norm(), p);
  if (p == p.conjugate()) return vn / 2;
  const int upper = vn - va;
  const LaurentSeries s = expand_at(f, p, upper + 1);
  if (s.is_zero()) throw ExpansionFailure("no leading term of " + f.str() + " at " + p.str());
  return s.valuation();
}

LaurentSeries expand_differential_at(const Differential& w, const CurvePoint& p, int prec) {
  if (w.f.is_zero()) return LaurentSeries(prec);
  const Curve& curve = w.f.curve();
  const int vf = curve.reference_differential_order(p);
  const int lb = order_lower_bound(w.f, p);
  if (lb + vf >= prec) return LaurentSeries(prec);
  const LaurentSeries fs = expand_at(w.f, p, prec - vf);
  const LaurentSeries frame = expand_frame(curve, p, prec - lb);
  return (fs * frame).truncated(prec);
}

std::vector<Scalar> expansion_coefficients(const FieldElement& f, const CurvePoint& p, int from, int to) {
  std::vector<Scalar> out;
  if (to <= from) return out;
  const LaurentSeries s = expand_at(f, p, to);
  out.reserve(static_cast<std::size_t>(to - from));
  for (int e = from; e < to; ++e) out.push_back(s.coeff(e));
  return out;
}

}  // namespace laxwb
