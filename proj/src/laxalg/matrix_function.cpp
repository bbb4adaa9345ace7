#include "laxwb/laxalg/matrix_function.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "laxwb/errors.hpp"

namespace laxwb {

MatrixFunction::MatrixFunction(const Curve& curve, int size)
    : curve_(curve), size_(size), entries_(static_cast<std::size_t>(size * size), FieldElement(curve)) {}

MatrixFunction MatrixFunction::from_constant(const Curve& curve, const ScalarMatrix& x, const FieldElement& f) {
  MatrixFunction m(curve, x.rows());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      if (!x(i, j).is_zero()) m(i, j) = f * x(i, j);
    }
  }
  return m;
}

bool MatrixFunction::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const FieldElement& f) { return f.is_zero(); });
}

FieldElement MatrixFunction::trace() const {
  FieldElement t(curve_);
  for (int i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

MatrixFunction MatrixFunction::transpose() const {
  MatrixFunction t(curve_, size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixFunction MatrixFunction::derivative() const {
  MatrixFunction d(curve_, size_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!entries_[k].is_zero()) d.entries_[k] = entries_[k].derivative();
  }
  return d;
}

MatrixFunction MatrixFunction::operator-() const {
  MatrixFunction r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

MatrixFunction operator+(const MatrixFunction& a, const MatrixFunction& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  MatrixFunction r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) {
    if (!b.entries_[k].is_zero()) r.entries_[k] += b.entries_[k];
  }
  return r;
}

MatrixFunction operator-(const MatrixFunction& a, const MatrixFunction& b) { return a + (-b); }

MatrixFunction operator*(const MatrixFunction& a, const MatrixFunction& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  const int n = a.size_;
  MatrixFunction r(a.curve_, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FieldElement acc(a.curve_);
      for (int l = 0; l < n; ++l) {
        if (a(i, l).is_zero() || b(l, j).is_zero()) continue;
        acc += a(i, l) * b(l, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

MatrixFunction operator*(const MatrixFunction& a, const FieldElement& f) {
  MatrixFunction r = a;
  for (auto& e : r.entries_) {
    if (!e.is_zero()) e = e * f;
  }
  return r;
}

MatrixFunction operator*(const MatrixFunction& a, const Scalar& c) {
  MatrixFunction r = a;
  for (auto& e : r.entries_) {
    if (!e.is_zero()) e = e * c;
  }
  return r;
}

MatrixFunction operator*(const ScalarMatrix& x, const MatrixFunction& a) {
  const int n = a.size_;
  MatrixFunction r(a.curve_, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FieldElement acc(a.curve_);
      for (int l = 0; l < n; ++l) {
        if (x(i, l).is_zero() || a(l, j).is_zero()) continue;
        acc += a(l, j) * x(i, l);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

MatrixFunction operator*(const MatrixFunction& a, const ScalarMatrix& x) {
  const int n = a.size_;
  MatrixFunction r(a.curve_, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FieldElement acc(a.curve_);
      for (int l = 0; l < n; ++l) {
        if (a(i, l).is_zero() || x(l, j).is_zero()) continue;
        acc += a(i, l) * x(l, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

MatrixFunction bracket(const MatrixFunction& a, const MatrixFunction& b) { return a * b - b * a; }

int order_at(const MatrixFunction& l, const CurvePoint& p) {
  int best = INT_MAX;
  for (const auto& f : l.entries()) {
    if (!f.is_zero()) best = std::min(best, order_at(f, p));
  }
  if (best == INT_MAX) throw ZeroElement("order of the zero matrix at " + p.str());
  return best;
}

int SeriesMatrix::precision() const {
  int p = INT_MAX;
  for (const auto& e : entries) p = std::min(p, e.precision());
  return p;
}

int SeriesMatrix::valuation() const {
  int v = INT_MAX;
  for (const auto& e : entries) v = std::min(v, e.is_zero() ? precision() : e.valuation());
  return v;
}

ScalarMatrix SeriesMatrix::coefficient(int e) const {
  ScalarMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = (*this)(i, j).coeff(e);
  return m;
}

SeriesMatrix SeriesMatrix::truncated(int prec) const {
  SeriesMatrix r{size, {}};
  r.entries.reserve(entries.size());
  for (const auto& e : entries) r.entries.push_back(e.truncated(prec));
  return r;
}

SeriesMatrix expand_at(const MatrixFunction& l, const CurvePoint& p, int prec) {
  SeriesMatrix r{l.size(), {}};
  r.entries.reserve(l.entries().size());
  for (const auto& f : l.entries()) r.entries.push_back(expand_at(f, p, prec));
  return r;
}

SeriesMatrix expand_differential_at(const MatrixFunction& l, const CurvePoint& p, int prec) {
  SeriesMatrix r{l.size(), {}};
  r.entries.reserve(l.entries().size());
  for (const auto& f : l.entries()) r.entries.push_back(expand_differential_at(Differential{f}, p, prec));
  return r;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix r{a.size, {}};
  for (std::size_t k = 0; k < a.entries.size(); ++k) r.entries.push_back(a.entries[k] + b.entries[k]);
  return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix r{a.size, {}};
  for (std::size_t k = 0; k < a.entries.size(); ++k) r.entries.push_back(a.entries[k] - b.entries[k]);
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  const int n = a.size;
  SeriesMatrix r{n, {}};
  r.entries.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentSeries acc = a(i, 0) * b(0, j);
      for (int l = 1; l < n; ++l) acc = acc + a(i, l) * b(l, j);
      r.entries.push_back(std::move(acc));
    }
  }
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const Scalar& c) {
  SeriesMatrix r{a.size, {}};
  for (const auto& e : a.entries) r.entries.push_back(e * c);
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const LaurentSeries& f) {
  SeriesMatrix r{a.size, {}};
  for (const auto& e : a.entries) r.entries.push_back(e * f);
  return r;
}

SeriesMatrix series_bracket(const SeriesMatrix& a, const SeriesMatrix& b) { return a * b - b * a; }

LaurentSeries series_trace(const SeriesMatrix& a) {
  LaurentSeries t = a(0, 0);
  for (int i = 1; i < a.size; ++i) t = t + a(i, i);
  return t;
}

}  // namespace laxwb
