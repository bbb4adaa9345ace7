#pragma once

#include <vector>

#include "laxwb/curve/expansion.hpp"
#include "laxwb/exactnum/linear_algebra.hpp"

namespace laxwb {

/// Square matrix of functions on a curve.
class MatrixFunction {
 public:
  MatrixFunction(const Curve& curve, int size);
  /// X * f for a constant matrix X.
  static MatrixFunction from_constant(const Curve& curve, const ScalarMatrix& x, const FieldElement& f);

  const Curve& curve() const { return curve_; }
  int size() const { return size_; }
  FieldElement& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * size_ + j)]; }
  const FieldElement& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * size_ + j)]; }
  const std::vector<FieldElement>& entries() const { return entries_; }

  bool is_zero() const;
  FieldElement trace() const;
  MatrixFunction transpose() const;
  /// Entrywise df / eta0.
  MatrixFunction derivative() const;

  MatrixFunction operator-() const;
  friend MatrixFunction operator+(const MatrixFunction& a, const MatrixFunction& b);
  friend MatrixFunction operator-(const MatrixFunction& a, const MatrixFunction& b);
  friend MatrixFunction operator*(const MatrixFunction& a, const MatrixFunction& b);
  friend MatrixFunction operator*(const MatrixFunction& a, const FieldElement& f);
  friend MatrixFunction operator*(const MatrixFunction& a, const Scalar& c);
  friend MatrixFunction operator*(const ScalarMatrix& x, const MatrixFunction& a);
  friend MatrixFunction operator*(const MatrixFunction& a, const ScalarMatrix& x);
  MatrixFunction& operator+=(const MatrixFunction& o) { return *this = *this + o; }
  friend bool operator==(const MatrixFunction& a, const MatrixFunction& b) { return a.entries_ == b.entries_; }

 private:
  Curve curve_;
  int size_;
  std::vector<FieldElement> entries_;
};

/// Pointwise commutator L L' - L' L.
MatrixFunction bracket(const MatrixFunction& a, const MatrixFunction& b);

/// Lowest vanishing order over all nonzero entries; throws ZeroElement for 0.
int order_at(const MatrixFunction& l, const CurvePoint& p);

/// Series matrix: every entry expanded at p up to t^prec.
struct SeriesMatrix {
  int size = 0;
  std::vector<LaurentSeries> entries;

  const LaurentSeries& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * size + j)]; }
  LaurentSeries& operator()(int i, int j) { return entries[static_cast<std::size_t>(i * size + j)]; }
  /// Smallest entry precision.
  int precision() const;
  /// Smallest entry valuation (precision() when all entries vanish).
  int valuation() const;
  ScalarMatrix coefficient(int e) const;
  SeriesMatrix truncated(int prec) const;
};

SeriesMatrix expand_at(const MatrixFunction& l, const CurvePoint& p, int prec);
/// Coefficient series of l * eta0 with respect to dt.
SeriesMatrix expand_differential_at(const MatrixFunction& l, const CurvePoint& p, int prec);

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator*(const SeriesMatrix& a, const Scalar& c);
SeriesMatrix operator*(const SeriesMatrix& a, const LaurentSeries& f);
SeriesMatrix series_bracket(const SeriesMatrix& a, const SeriesMatrix& b);
LaurentSeries series_trace(const SeriesMatrix& a);

}  // namespace laxwb
