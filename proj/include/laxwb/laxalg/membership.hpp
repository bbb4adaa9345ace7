#pragma once

#include <map>
#include <optional>
#include <vector>

#include "laxwb/laxalg/algebra_type.hpp"
#include "laxwb/laxalg/matrix_function.hpp"

namespace laxwb {

/// Expansion data and recovered witnesses at one weak point.
struct WeakPointReport {
  CurvePoint gamma = CurvePoint::infinity();
  bool active = false;
  std::map<int, ScalarMatrix> coefficients;  ///< order k -> L_{s,k}
  std::optional<ScalarVector> beta;
  std::optional<Scalar> kappa;
  std::optional<Scalar> nu;  ///< sp only
};

struct TyurinExpansionReport {
  std::vector<WeakPointReport> points;
};

/// Checks that L takes values in the algebra, is holomorphic away from the
/// weak points and P+-, respects the weak pole bounds and satisfies the
/// Tyurin relations, recovering beta_s, kappa_s (and nu_s for sp). Throws
/// NotMember naming the first violated condition and point.
TyurinExpansionReport verify_membership(const MatrixFunction& l, const AlgebraSpec& spec);

/// Poles only at `allowed` (finite points checked through the coordinate of
/// each denominator factor); throws NotMember otherwise. `bounds` gives the
/// maximal pole order at points that are not free (absent: 0).
void check_pole_support(const MatrixFunction& l, const std::vector<CurvePoint>& free_points,
                        const std::map<CurvePoint, int>& bounds, const std::string& what);

}  // namespace laxwb
