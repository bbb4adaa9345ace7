#pragma once

#include <string>
#include <vector>

#include "laxwb/curve/curve.hpp"
#include "laxwb/exactnum/linear_algebra.hpp"

namespace laxwb {

enum class AlgebraKind { gl, sl, s, so, sp };

/// One of gl(n), sl(n), s(n), so(n), sp(2n). For sp, `n` is half the matrix
/// size and sigma = [[0, I], [-I, 0]].
class AlgebraType {
 public:
  AlgebraType(AlgebraKind kind, int n);
  /// "gl", "sl", "s", "so" or "sp"; throws std::invalid_argument otherwise.
  static AlgebraType parse(const std::string& kind, int n);

  AlgebraKind kind() const { return kind_; }
  int n() const { return n_; }
  /// Matrix size: 2n for sp, n otherwise.
  int size() const { return kind_ == AlgebraKind::sp ? 2 * n_ : n_; }
  int dimension() const;
  std::string kind_name() const;
  /// e.g. "gl(2)", "sp(2)".
  std::string name() const;

  /// The standard symplectic matrix (sp only).
  ScalarMatrix sigma() const;
  bool contains(const ScalarMatrix& x) const;

  friend bool operator==(const AlgebraType&, const AlgebraType&) = default;

 private:
  AlgebraKind kind_;
  int n_;
};

/// Deterministic basis X^1, ..., X^dim of the matrix algebra.
std::vector<ScalarMatrix> matrix_basis(const AlgebraType& algebra);

/// Coordinates of x in matrix_basis(algebra); throws std::invalid_argument if
/// x is not in the algebra.
ScalarVector basis_coordinates(const AlgebraType& algebra, const ScalarMatrix& x);

/// A weak singularity gamma with its Tyurin vector alpha.
struct TyurinPoint {
  CurvePoint gamma;
  ScalarVector alpha;

  bool active() const;  ///< alpha != 0
  friend bool operator==(const TyurinPoint&, const TyurinPoint&) = default;
};

struct AlgebraSpec {
  Curve curve;
  CurvePoint p_plus;
  CurvePoint p_minus;
  AlgebraType algebra;
  std::vector<TyurinPoint> tyurin;

  /// Number of weak singularities required: matrix size times genus.
  int required_weak_points() const { return algebra.size() * curve.genus(); }
  /// Allowed pole order at a weak point: 0 when alpha = 0, 2 for sp, else 1.
  int weak_pole_order(const TyurinPoint& w) const;
  /// Throws InvalidTyurin describing the first violated requirement.
  void validate() const;
  /// The same curve, points and Tyurin data with another matrix algebra of
  /// the same size.
  AlgebraSpec with_algebra(const AlgebraType& other) const;
};

}  // namespace laxwb
