#pragma once

#include <string>
#include <vector>

#include "laxwb/laxalg/algebra_type.hpp"
#include "laxwb/laxalg/matrix_function.hpp"

namespace laxwb {

/// omega = F * eta0. For gl, sl and s the form is gl(n)-valued and shared.
struct ConnectionForm {
  MatrixFunction F;
  AlgebraType algebra;  ///< algebra the values of F lie in
  int p_minus_pole = 0;  ///< pole budget at P- that made the system solvable
};

/// The matrix algebra in which the connection form of `algebra` takes values.
AlgebraType connection_algebra(const AlgebraType& algebra);

/// Smallest pole budget at P- in [0, budget_cap] for which the conditions at
/// the weak points are solvable; free variables of the affine system are set
/// to zero. Throws NoConnectionForm past the cap.
ConnectionForm build_connection_form(const AlgebraSpec& spec, int budget_cap = 6);

struct WeakConnectionData {
  CurvePoint gamma = CurvePoint::infinity();
  bool active = false;
  ScalarMatrix residue;       ///< omega_{s,-1}
  ScalarVector beta;          ///< beta~ (active points only)
  Scalar kappa;               ///< omega_{s,0} alpha = kappa~ alpha
};

struct ConnectionReport {
  std::vector<WeakConnectionData> points;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Re-expands omega at P+ and at every weak point and checks the defining
/// conditions independently of the solver.
ConnectionReport verify_connection_form(const ConnectionForm& omega, const AlgebraSpec& spec);

/// e_n = h / eta0 with order n + 1 at P+ (leading coefficient 1 in the local
/// frame d/dt) and order -n + 1 - 3g at P-.
struct GradedVectorField {
  int degree = 0;
  VectorFieldElement value;
  int relax = 0;  ///< 1 if the bound at P- had to be relaxed
};

/// Throws NonGenericDegree if one relaxation step at P- does not suffice.
GradedVectorField vector_field_basis(const AlgebraSpec& spec, int n);

/// e(L) + [omega(e), L], with omega(e) = F * h for e = h / eta0.
MatrixFunction covariant_derivative(const VectorFieldElement& e, const MatrixFunction& l, const ConnectionForm& omega);

}  // namespace laxwb
