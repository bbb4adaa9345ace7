#pragma once

#include <string>
#include <vector>

#include "laxwb/curve/field_element.hpp"
#include "laxwb/laxalg/algebra_type.hpp"
#include "laxwb/laxalg/matrix_function.hpp"

namespace laxwb {

/// weight * (coefficient of t^order in entry (row, col)) at a weak point.
struct LocalTerm {
  int order;
  int row;
  int col;
  Scalar weight;
};

/// sum(terms) = rhs.
struct LocalCondition {
  std::vector<LocalTerm> terms;
  Scalar rhs;
  std::string tag;
};

/// Tyurin conditions on the expansion coefficients L_{s,k} of an algebra
/// element at a weak point with vector alpha != 0.
std::vector<LocalCondition> lax_conditions(const AlgebraType& algebra, const ScalarVector& alpha);

/// Conditions on the coefficients omega_{s,k} of a connection form at a weak
/// point with alpha != 0 (inhomogeneous through the normalization).
std::vector<LocalCondition> connection_conditions(const AlgebraType& algebra, const ScalarVector& alpha);

/// Exact linear system for matrices L = sum_r f_r X^r with every f_r in one
/// Riemann-Roch space; unknown (r, k) is the coefficient of the k-th space
/// basis function in f_r, stored at index r * functions.size() + k.
struct ConstraintSystem {
  Curve curve;
  Divisor divisor;
  std::vector<FieldElement> functions;
  std::vector<ScalarMatrix> matrices;
  ScalarMatrix equations;
  ScalarVector rhs;
  std::vector<std::string> tags;

  int unknowns() const { return static_cast<int>(functions.size() * matrices.size()); }
  MatrixFunction assemble(const ScalarVector& coords) const;
};

struct WeakConditions {
  CurvePoint point;
  std::vector<LocalCondition> conditions;
};

/// Builds the system; with `differential` the local coefficients are those of
/// f * eta0 with respect to dt instead of those of f.
ConstraintSystem build_constraint_system(const Curve& curve, const Divisor& divisor,
                                         const std::vector<ScalarMatrix>& matrices,
                                         const std::vector<WeakConditions>& weak, bool differential);

/// Divisor for degree m: order >= m at P+, pole order <= m + g + relax at P-,
/// and the weak pole allowance at each gamma_s.
Divisor degree_divisor(const AlgebraSpec& spec, int m, int relax);

/// The system cutting out { L in the algebra : L in L(degree_divisor) }.
ConstraintSystem assemble_constraints(const AlgebraSpec& spec, int m, int relax = 0);

}  // namespace laxwb
