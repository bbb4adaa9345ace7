#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxwb/exactnum/scalar.hpp"

namespace laxwb {

using ScalarVector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static ScalarMatrix identity(int n);
  static ScalarMatrix from_rows(const std::vector<ScalarVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  ScalarVector row(int i) const;
  void append_row(const ScalarVector& r);
  bool is_zero() const;
  Scalar trace() const;
  ScalarMatrix transpose() const;

  ScalarMatrix operator-() const;
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const ScalarMatrix& a, const Scalar& c);
  friend ScalarVector operator*(const ScalarMatrix& a, const ScalarVector& v);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) = default;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  ScalarMatrix reduced;     ///< nonzero rows only
  std::vector<int> pivots;  ///< pivot column of each row of `reduced`
};

/// Reduced row echelon form; pivots are searched left to right.
RowEchelon rref(ScalarMatrix m);
int rank(const ScalarMatrix& m);
/// Basis of {v : m v = 0}; the k-th vector has a 1 at the k-th free column
/// and zeros at the other free columns.
std::vector<ScalarVector> nullspace(const ScalarMatrix& m);
/// Some solution of m v = rhs (free variables set to zero), or nullopt if
/// the system is inconsistent.
std::optional<ScalarVector> solve_affine(const ScalarMatrix& m, const ScalarVector& rhs);

/// Reduced echelon basis of span(vectors) with pivots chosen by scanning the
/// coordinates in `column_order`.
std::vector<ScalarVector> echelon_basis(const std::vector<ScalarVector>& vectors,
                                        const std::vector<int>& column_order);

ScalarVector operator+(const ScalarVector& a, const ScalarVector& b);
ScalarVector operator*(const ScalarVector& a, const Scalar& c);
Scalar dot(const ScalarVector& a, const ScalarVector& b);
bool is_zero(const ScalarVector& v);

}  // namespace laxwb
