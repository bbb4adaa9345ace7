#include "laxwb/exactnum/linear_algebra.hpp"

#include <stdexcept>

namespace laxwb {

ScalarMatrix ScalarMatrix::identity(int n) {
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<ScalarVector>& rows, int cols) {
  ScalarMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

ScalarVector ScalarMatrix::row(int i) const {
  auto first = data_.begin() + static_cast<long>(i) * cols_;
  return ScalarVector(first, first + cols_);
}

void ScalarMatrix::append_row(const ScalarVector& r) {
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Scalar ScalarMatrix::trace() const {
  Scalar t;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::operator-() const {
  ScalarMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ScalarMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  return r;
}

ScalarMatrix operator*(const ScalarMatrix& a, const Scalar& c) {
  ScalarMatrix r = a;
  for (auto& x : r.data_) x *= c;
  return r;
}

ScalarVector operator*(const ScalarMatrix& a, const ScalarVector& v) {
  ScalarVector out(static_cast<std::size_t>(a.rows_));
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero()) {
        out[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
      }
    }
  return out;
}

std::string ScalarMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
    s += "]";
  }
  return s + "]";
}

RowEchelon rref(ScalarMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (int j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (int j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  ScalarMatrix reduced(0, cols);
  for (int i = 0; i < r; ++i) reduced.append_row(m.row(i));
  return {std::move(reduced), std::move(pivots)};
}

int rank(const ScalarMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
  const RowEchelon e = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<ScalarVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    ScalarVector v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[static_cast<std::size_t>(e.pivots[r])] = -e.reduced(static_cast<int>(r), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> solve_affine(const ScalarMatrix& m, const ScalarVector& rhs) {
  const int cols = m.cols();
  ScalarMatrix aug(m.rows(), cols + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = rhs[static_cast<std::size_t>(i)];
  }
  const RowEchelon e = rref(std::move(aug));
  ScalarVector sol(static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    sol[static_cast<std::size_t>(e.pivots[r])] = e.reduced(static_cast<int>(r), cols);
  }
  return sol;
}

std::vector<ScalarVector> echelon_basis(const std::vector<ScalarVector>& vectors,
                                        const std::vector<int>& column_order) {
  if (vectors.empty()) return {};
  const int n = static_cast<int>(column_order.size());
  ScalarMatrix m(0, n);
  for (const auto& v : vectors) {
    ScalarVector permuted(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) permuted[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(column_order[static_cast<std::size_t>(k)])];
    m.append_row(permuted);
  }
  const RowEchelon e = rref(std::move(m));
  std::vector<ScalarVector> out;
  for (int r = 0; r < e.reduced.rows(); ++r) {
    ScalarVector v(vectors.front().size());
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(column_order[static_cast<std::size_t>(k)])] = e.reduced(r, k);
    out.push_back(std::move(v));
  }
  return out;
}

ScalarVector operator+(const ScalarVector& a, const ScalarVector& b) {
  ScalarVector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

ScalarVector operator*(const ScalarVector& a, const Scalar& c) {
  ScalarVector r = a;
  for (auto& x : r) x *= c;
  return r;
}

Scalar dot(const ScalarVector& a, const ScalarVector& b) {
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  }
  return s;
}

bool is_zero(const ScalarVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace laxwb
