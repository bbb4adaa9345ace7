#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "laxwb/exactnum/laurent_series.hpp"
#include "laxwb/exactnum/polynomial.hpp"
#include "laxwb/exactnum/scalar.hpp"

namespace laxwb {

/// A point of the projective line (z-coordinate stored in x) or of a
/// Weierstrass cubic.
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint finite(Scalar x, Scalar y = Scalar()) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return infinity_; }
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  /// (x, -y); infinity and points with y = 0 are self-conjugate.
  CurvePoint conjugate() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b);

  std::string str() const;

 private:
  CurvePoint() = default;
  CurvePoint(Scalar x, Scalar y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool infinity_ = true;
  Scalar x_;
  Scalar y_;
};

/// Local picture at a point: the coordinate function written in the canonical
/// uniformizer t, as x = shift + s(t), together with y(t) and the reference
/// differential eta0 = frame(t) dt.
///
/// Uniformizers: genus 0 uses t = z - z0, or t = 1/z at infinity; genus 1 uses
/// t = x - x0 if y0 != 0, t = y if y0 = 0, and t = x/y at infinity.
struct LocalChart {
  int relative_precision = 0;
  bool has_shift = false;  ///< s = x - x0 (finite points); else s = x
  Scalar shift;
  bool s_is_uniformizer = false;  ///< s(t) = t exactly
  LaurentSeries s;
  LaurentSeries y;
  LaurentSeries frame;
  std::vector<LaurentSeries> s_powers;  ///< s^0, s^1, ...
};

class Curve {
 public:
  static Curve projective_line();
  /// y^2 = x^3 + a x + b; throws std::invalid_argument when 4a^3 + 27b^2 = 0.
  static Curve elliptic(const Scalar& a, const Scalar& b);

  int genus() const { return impl_->genus; }
  const Scalar& a() const { return impl_->a; }
  const Scalar& b() const { return impl_->b; }
  /// x^3 + a x + b (genus 1 only).
  const Polynomial& cubic() const { return impl_->cubic; }

  bool contains(const CurvePoint& p) const;
  /// Name of the coordinate used in printed functions ("z" or "x").
  std::string coordinate_name() const { return genus() == 0 ? "z" : "x"; }
  /// Human-readable uniformizer at p, recorded in report metadata.
  std::string uniformizer_name(const CurvePoint& p) const;
  /// Order of the reference differential eta0 at p (dz has a double pole at
  /// infinity; dx/y is holomorphic and nowhere vanishing).
  int reference_differential_order(const CurvePoint& p) const;

  /// Chart with at least `relative_precision` known terms in s, y and frame
  /// and powers of s up to `max_power`. Cached per point; thread safe.
  std::shared_ptr<const LocalChart> chart(const CurvePoint& p, int relative_precision,
                                          int max_power) const;

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.impl_->genus == b.impl_->genus && a.impl_->a == b.impl_->a && a.impl_->b == b.impl_->b;
  }

  std::string str() const;

 private:
  struct Impl {
    int genus = 0;
    Scalar a;
    Scalar b;
    Polynomial cubic;
    mutable std::mutex chart_mutex;
    mutable std::map<CurvePoint, std::shared_ptr<const LocalChart>> charts;
  };
  explicit Curve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace laxwb
