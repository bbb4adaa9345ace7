#include "laxwb/curve/curve.hpp"

#include <stdexcept>

#include "laxwb/errors.hpp"

namespace laxwb {

CurvePoint CurvePoint::conjugate() const {
  if (infinity_) return *this;
  return CurvePoint(x_, -y_);
}

std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
  // Infinity sorts last.
  if (a.infinity_ != b.infinity_) return a.infinity_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.infinity_) return std::strong_ordering::equal;
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  return a.y_ <=> b.y_;
}

std::string CurvePoint::str() const {
  if (infinity_) return "inf";
  return "(" + x_.str() + ", " + y_.str() + ")";
}

Curve Curve::projective_line() {
  auto impl = std::make_shared<Impl>();
  impl->genus = 0;
  return Curve(std::move(impl));
}

Curve Curve::elliptic(const Scalar& a, const Scalar& b) {
  const Scalar disc = Scalar(4) * a * a * a + Scalar(27) * b * b;
  if (disc.is_zero()) throw std::invalid_argument("singular Weierstrass cubic: 4a^3 + 27b^2 = 0");
  auto impl = std::make_shared<Impl>();
  impl->genus = 1;
  impl->a = a;
  impl->b = b;
  impl->cubic = Polynomial(std::vector<Scalar>{b, a, Scalar(0), Scalar(1)});
  return Curve(std::move(impl));
}

bool Curve::contains(const CurvePoint& p) const {
  if (p.is_infinity()) return true;
  if (genus() == 0) return p.y().is_zero();
  return p.y() * p.y() == cubic().evaluate(p.x());
}

std::string Curve::uniformizer_name(const CurvePoint& p) const {
  if (genus() == 0) return p.is_infinity() ? "1/z" : "z - (" + p.x().str() + ")";
  if (p.is_infinity()) return "x/y";
  if (p.y().is_zero()) return "y";
  return "x - (" + p.x().str() + ")";
}

int Curve::reference_differential_order(const CurvePoint& p) const {
  return (genus() == 0 && p.is_infinity()) ? -2 : 0;
}

std::string Curve::str() const {
  if (genus() == 0) return "P^1";
  return "y^2 = x^3 + (" + a().str() + ")*x + (" + b().str() + ")";
}

namespace {

// Solve s = phi(s) by fixed-point iteration until the iterate stops changing;
// `phi` must be a contraction raising valuations by at least one per step.
template <typename Phi>
LaurentSeries fixed_point(LaurentSeries start, Phi phi, int max_iterations) {
  LaurentSeries cur = std::move(start);
  for (int k = 0; k < max_iterations; ++k) {
    LaurentSeries next = phi(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  return cur;
}

std::shared_ptr<LocalChart> build_chart(const Curve& curve, const CurvePoint& p, int n) {
  auto c = std::make_shared<LocalChart>();
  c->relative_precision = n;
  if (curve.genus() == 0) {
    if (p.is_infinity()) {
      c->s = LaurentSeries(-1, {Scalar(1)}, n - 1);           // z = 1/t
      c->frame = LaurentSeries(-2, {Scalar(-1)}, n - 2);      // dz = -t^-2 dt
    } else {
      c->has_shift = true;
      c->shift = p.x();
      c->s_is_uniformizer = true;
      c->s = LaurentSeries(1, {Scalar(1)}, n + 1);
      c->frame = LaurentSeries(0, {Scalar(1)}, n);
    }
    c->y = LaurentSeries(n);
    return c;
  }
  const Scalar& a = curve.a();
  const Scalar& b = curve.b();
  if (p.is_infinity()) {
    // t = x/y, x = t^-2 w, y = t^-3 w with w = 1 - (a t^4 w + b t^6) / w^2.
    const LaurentSeries t4a = LaurentSeries::monomial(a, 4, n);
    const LaurentSeries t6b = LaurentSeries::monomial(b, 6, n);
    const LaurentSeries one = LaurentSeries::monomial(Scalar(1), 0, n);
    LaurentSeries w = fixed_point(one, [&](const LaurentSeries& w0) {
      return one - (t4a * w0 + t6b) * ls_invert(w0 * w0);
    }, n + 2);
    const LaurentSeries tm2 = LaurentSeries::monomial(Scalar(1), -2, n + 8);
    const LaurentSeries tm3 = LaurentSeries::monomial(Scalar(1), -3, n + 8);
    c->s = tm2 * w;
    c->y = tm3 * w;
    c->frame = ls_derivative(c->s) * ls_invert(c->y);
    return c;
  }
  c->has_shift = true;
  c->shift = p.x();
  const Polynomial shifted = curve.cubic().shifted(p.x());  // F(x0 + s)
  if (!p.y().is_zero()) {
    // t = x - x0, y = sqrt(F(x0 + t)) with y(0) = y0.
    c->s_is_uniformizer = true;
    c->s = LaurentSeries(1, {Scalar(1)}, n + 1);
    std::vector<Scalar> yc(static_cast<std::size_t>(n));
    yc[0] = p.y();
    const Scalar inv2y0 = (Scalar(2) * p.y()).inverse();
    for (int k = 1; k < n; ++k) {
      Scalar acc = shifted.coeff(k);
      for (int i = 1; i < k; ++i) acc -= yc[static_cast<std::size_t>(i)] * yc[static_cast<std::size_t>(k - i)];
      yc[static_cast<std::size_t>(k)] = acc * inv2y0;
    }
    c->y = LaurentSeries(0, std::move(yc), n);
    c->frame = ls_invert(c->y);
    return c;
  }
  // t = y; s = x - x0 solves c1 s + c2 s^2 + s^3 = t^2 with c1 = F'(x0) != 0.
  const Scalar c1 = shifted.coeff(1);
  const Scalar c2 = shifted.coeff(2);
  if (c1.is_zero()) throw ExpansionFailure("singular point on the curve: " + p.str());
  const Scalar inv_c1 = c1.inverse();
  const int prec = n + 2;
  const LaurentSeries t2 = LaurentSeries::monomial(Scalar(1), 2, prec);
  LaurentSeries s = fixed_point(t2 * inv_c1, [&](const LaurentSeries& s0) {
    const LaurentSeries sq = s0 * s0;
    return (t2 - sq * c2 - sq * s0) * inv_c1;
  }, n + 2);
  c->s = s;
  c->y = LaurentSeries(1, {Scalar(1)}, n + 1);
  c->frame = ls_derivative(s) * ls_invert(c->y);
  return c;
}

}  // namespace

std::shared_ptr<const LocalChart> Curve::chart(const CurvePoint& p, int relative_precision,
                                               int max_power) const {
  if (!contains(p)) throw ExpansionFailure("point " + p.str() + " is not on " + str());
  relative_precision = std::max(relative_precision, 2);
  max_power = std::max(max_power, 1);
  std::lock_guard<std::mutex> lock(impl_->chart_mutex);
  auto it = impl_->charts.find(p);
  std::shared_ptr<const LocalChart> have = it == impl_->charts.end() ? nullptr : it->second;
  if (have && have->relative_precision >= relative_precision &&
      static_cast<int>(have->s_powers.size()) > max_power) {
    return have;
  }
  int n = relative_precision;
  int powers = max_power;
  if (have) {
    n = std::max(n, have->relative_precision);
    powers = std::max(powers, static_cast<int>(have->s_powers.size()) - 1);
  }
  std::shared_ptr<LocalChart> fresh;
  if (have && have->relative_precision == n) {
    fresh = std::make_shared<LocalChart>(*have);
  } else {
    fresh = build_chart(*this, p, n + n / 2);
  }
  if (fresh->s_powers.empty()) {
    fresh->s_powers.push_back(LaurentSeries::monomial(Scalar(1), 0, fresh->relative_precision));
  }
  while (static_cast<int>(fresh->s_powers.size()) <= powers) {
    fresh->s_powers.push_back(fresh->s_powers.back() * fresh->s);
  }
  impl_->charts[p] = fresh;
  return fresh;
}

}  // namespace laxwb
