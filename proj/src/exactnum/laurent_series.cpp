#include "laxwb/exactnum/laurent_series.hpp"

#include <algorithm>

#include "laxwb/errors.hpp"

namespace laxwb {

LaurentSeries::LaurentSeries(int start, std::vector<Scalar> coeffs, int precision)
    : start_(start), coeffs_(std::move(coeffs)), precision_(precision) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(const Scalar& c, int exponent, int precision) {
  if (exponent >= precision || c.is_zero()) return LaurentSeries(precision);
  return LaurentSeries(exponent, {c}, precision);
}

void LaurentSeries::normalize() {
  // Drop coefficients at or beyond the precision, then strip zeros at both ends.
  const long keep = std::max(0L, static_cast<long>(precision_) - start_);
  if (static_cast<long>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    start_ = precision_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    start_ += static_cast<int>(lead);
  }
}

Scalar LaurentSeries::coeff(int e) const {
  if (e >= precision_) {
    throw InsufficientPrecision("coefficient of t^" + std::to_string(e) +
                                " requested from a series known to O(t^" +
                                std::to_string(precision_) + ")");
  }
  if (e < start_ || e >= start_ + static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(e - start_)];
}

const Scalar& LaurentSeries::leading() const {
  if (coeffs_.empty()) throw ZeroLeadingCoefficient("leading coefficient of a zero series");
  return coeffs_.front();
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  if (prec > precision_) {
    throw InsufficientPrecision("cannot raise precision from " + std::to_string(precision_) +
                                " to " + std::to_string(prec));
  }
  return LaurentSeries(start_, coeffs_, prec);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.precision_, b.precision_);
  if (a.is_zero()) return b.truncated(prec);
  if (b.is_zero()) return a.truncated(prec);
  const int lo = std::min(a.start_, b.start_);
  if (lo >= prec) return LaurentSeries(prec);
  std::vector<Scalar> out(static_cast<std::size_t>(prec - lo));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const int e = a.start_ + static_cast<int>(k);
    if (e >= prec) break;
    out[static_cast<std::size_t>(e - lo)] += a.coeffs_[k];
  }
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    const int e = b.start_ + static_cast<int>(k);
    if (e >= prec) break;
    out[static_cast<std::size_t>(e - lo)] += b.coeffs_[k];
  }
  return LaurentSeries(lo, std::move(out), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.precision_ + b.start_, b.precision_ + a.start_);
  if (a.is_zero() || b.is_zero()) return LaurentSeries(prec);
  const int lo = a.start_ + b.start_;
  if (lo >= prec) return LaurentSeries(prec);
  const std::size_t len = static_cast<std::size_t>(prec - lo);
  std::vector<Scalar> out(len);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(lo, std::move(out), prec);
}

LaurentSeries operator*(const LaurentSeries& a, const Scalar& c) {
  if (c.is_zero()) return LaurentSeries(a.precision_);
  LaurentSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * ls_invert(b); }

std::string LaurentSeries::str(const std::string& var) const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const int e = start_ + static_cast<int>(k);
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].str() + ")";
    if (e != 0) out += "*" + var + "^" + std::to_string(e);
  }
  if (!out.empty()) out += " + ";
  return out + "O(" + var + "^" + std::to_string(precision_) + ")";
}

LaurentSeries ls_add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
LaurentSeries ls_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }
LaurentSeries ls_neg(const LaurentSeries& a) { return -a; }

LaurentSeries ls_invert(const LaurentSeries& a) {
  if (a.is_zero()) {
    throw ZeroLeadingCoefficient("cannot invert a series that is zero up to O(t^" +
                                 std::to_string(a.precision()) + ")");
  }
  const int v = a.valuation();
  const int rel = a.precision() - v;  // relative precision of the unit part
  const auto& c = a.coeffs();
  const Scalar inv0 = c.front().inverse();
  std::vector<Scalar> b(static_cast<std::size_t>(rel));
  b[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    Scalar acc;
    for (int i = 1; i <= k && i < static_cast<int>(c.size()); ++i) {
      if (!c[static_cast<std::size_t>(i)].is_zero()) {
        acc += c[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
      }
    }
    b[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return LaurentSeries(-v, std::move(b), rel - v);
}

LaurentSeries ls_derivative(const LaurentSeries& a) {
  std::vector<Scalar> out;
  out.reserve(a.coeffs().size());
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    out.push_back(a.coeffs()[k] * Scalar(static_cast<long>(a.valuation()) + static_cast<long>(k)));
  }
  return LaurentSeries(a.valuation() - 1, std::move(out), a.precision() - 1);
}

Scalar ls_residue(const LaurentSeries& a) {
  if (a.precision() <= -1) {
    throw InsufficientPrecision("residue needs the t^-1 coefficient but the series is known only to O(t^" +
                                std::to_string(a.precision()) + ")");
  }
  return a.coeff(-1);
}

}  // namespace laxwb
