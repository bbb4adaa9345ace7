#include "laxwb/connection/connection.hpp"

#include <algorithm>

#include "laxwb/curve/riemann_roch.hpp"
#include "laxwb/errors.hpp"
#include "laxwb/laxalg/constraints.hpp"
#include "laxwb/laxalg/membership.hpp"

namespace laxwb {

namespace {

// div(eta0): -2 at infinity in genus 0, zero in genus 1.
Divisor reference_divisor(const Curve& curve) {
  Divisor d;
  if (curve.genus() == 0) d.set(CurvePoint::infinity(), -2);
  return d;
}

Divisor negated(const Divisor& d) {
  Divisor out;
  for (const auto& [p, c] : d.terms()) out.set(p, -c);
  return out;
}

int pivot_of(const ScalarVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

ScalarMatrix outer(const ScalarVector& a, const ScalarVector& b) {
  const int n = static_cast<int>(a.size());
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return m;
}

bool takes_values_in(const MatrixFunction& f, const AlgebraType& alg) {
  switch (alg.kind()) {
    case AlgebraKind::so: return (f + f.transpose()).is_zero();
    case AlgebraKind::sp: {
      const ScalarMatrix s = alg.sigma();
      return (f.transpose() * s + s * f).is_zero();
    }
    default: return true;
  }
}

// Residue form, normalization and eigenvector condition at one active point.
void check_weak_point(const AlgebraType& alg, const ScalarVector& alpha, const SeriesMatrix& s, WeakConnectionData& out,
                      std::vector<std::string>& violations) {
  const std::string at = " at " + out.gamma.str();
  const int n = alg.size();
  const int piv = pivot_of(alpha);
  const Scalar ap = alpha[static_cast<std::size_t>(piv)];
  const ScalarMatrix& r = out.residue;
  ScalarVector beta(static_cast<std::size_t>(n));
  Scalar norm;
  switch (alg.kind()) {
    case AlgebraKind::gl:
    case AlgebraKind::sl:
    case AlgebraKind::s: {
      for (int j = 0; j < n; ++j) beta[static_cast<std::size_t>(j)] = r(piv, j) / ap;
      if (!(r == outer(alpha, beta))) violations.push_back("residue is not alpha beta^t" + at);
      norm = dot(beta, alpha);
      break;
    }
    case AlgebraKind::so: {
      ScalarVector v0(static_cast<std::size_t>(n));
      v0[static_cast<std::size_t>(piv)] = ap.inverse();
      beta = (r * v0) * Scalar(-1);
      if (!(r == outer(alpha, beta) - outer(beta, alpha))) violations.push_back("residue is not alpha beta^t - beta alpha^t" + at);
      // beta is fixed up to multiples of alpha; the normalization is read off r alpha = (beta^t alpha) alpha.
      const ScalarVector ra = r * alpha;
      norm = ra[static_cast<std::size_t>(piv)] / ap;
      if (!(ra == alpha * norm)) violations.push_back("residue does not map alpha into span(alpha)" + at);
      break;
    }
    case AlgebraKind::sp: {
      const ScalarMatrix sigma = alg.sigma();
      const ScalarMatrix sm = r * (sigma * Scalar(-1));
      ScalarVector v0(static_cast<std::size_t>(n));
      v0[static_cast<std::size_t>(piv)] = ap.inverse();
      const ScalarVector sv0 = sm * v0;
      beta = sv0 + alpha * (dot(v0, sv0) * Scalar::rational(-1, 2));
      if (!(sm == outer(alpha, beta) + outer(beta, alpha))) {
        violations.push_back("residue is not (alpha beta^t + beta alpha^t) sigma" + at);
      }
      norm = dot(beta, sigma * alpha);
      ScalarVector left(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) left[static_cast<std::size_t>(i)] += alpha[static_cast<std::size_t>(k)] * sigma(k, i);
      if (!dot(left, s.coefficient(1) * alpha).is_zero()) violations.push_back("alpha^t sigma omega_1 alpha is not zero" + at);
      break;
    }
  }
  if (!(norm == Scalar(1))) violations.push_back("residue normalization is " + norm.str() + ", not 1" + at);
  out.beta = beta;
  const ScalarVector v = s.coefficient(0) * alpha;
  out.kappa = v[static_cast<std::size_t>(piv)] / ap;
  if (!(v == alpha * out.kappa)) violations.push_back("alpha is not an eigenvector of omega_0" + at);
}

}  // namespace

AlgebraType connection_algebra(const AlgebraType& algebra) {
  switch (algebra.kind()) {
    case AlgebraKind::so:
    case AlgebraKind::sp: return algebra;
    default: return AlgebraType(AlgebraKind::gl, algebra.size());
  }
}

ConnectionForm build_connection_form(const AlgebraSpec& spec, int budget_cap) {
  spec.validate();
  const AlgebraType alg = connection_algebra(spec.algebra);
  std::vector<WeakConditions> weak;
  for (const auto& w : spec.tyurin)
    if (w.active()) weak.push_back({w.gamma, connection_conditions(spec.algebra, w.alpha)});

  for (int budget = 0; budget <= budget_cap; ++budget) {
    Divisor d;
    d.set(spec.p_plus, 0);
    d.set(spec.p_minus, budget);
    for (const auto& w : spec.tyurin) d.set(w.gamma, w.active() ? 1 : 0);
    d = d + reference_divisor(spec.curve);
    const ConstraintSystem sys = build_constraint_system(spec.curve, d, matrix_basis(alg), weak, true);
    std::optional<ScalarVector> sol;
    if (sys.equations.rows() == 0) {
      sol = ScalarVector(static_cast<std::size_t>(sys.unknowns()));
    } else {
      sol = solve_affine(sys.equations, sys.rhs);
    }
    if (!sol) continue;
    MatrixFunction f = sys.functions.empty() ? MatrixFunction(spec.curve, alg.size()) : sys.assemble(*sol);
    return {std::move(f), alg, budget};
  }
  throw NoConnectionForm("no connection form with pole order <= " + std::to_string(budget_cap) + " at " +
                         spec.p_minus.str());
}

ConnectionReport verify_connection_form(const ConnectionForm& omega, const AlgebraSpec& spec) {
  ConnectionReport report;
  const Curve& curve = spec.curve;
  const MatrixFunction& f = omega.F;
  if (!takes_values_in(f, omega.algebra)) report.violations.push_back("omega does not take values in " + omega.algebra.name());

  // Finite poles only at P- and the weak points; infinity is examined through the differential.
  std::vector<CurvePoint> free_points = {spec.p_minus};
  if (curve.genus() == 0) free_points.push_back(CurvePoint::infinity());
  std::map<CurvePoint, int> bounds;
  if (!spec.p_plus.is_infinity()) bounds[spec.p_plus] = 0;
  for (const auto& w : spec.tyurin) bounds[w.gamma] = w.active() ? 1 : 0;
  try {
    check_pole_support(f, free_points, bounds, "omega");
  } catch (const NotMember& e) {
    report.violations.push_back(e.what());
  }

  if (f.is_zero()) {
    for (const auto& w : spec.tyurin) {
      if (w.active()) report.violations.push_back("omega has no residue at " + w.gamma.str());
      report.points.push_back({w.gamma, w.active(), ScalarMatrix(f.size(), f.size()), {}, {}});
    }
    return report;
  }
  auto differential_order = [&](const CurvePoint& p) { return expand_differential_at(f, p, 0).valuation(); };
  if (differential_order(spec.p_plus) < 0) report.violations.push_back("omega has a pole at P+");
  if (curve.genus() == 0 && !spec.p_minus.is_infinity()) {
    const bool weak_at_infinity = std::any_of(spec.tyurin.begin(), spec.tyurin.end(),
                                              [](const TyurinPoint& w) { return w.gamma.is_infinity(); });
    if (!weak_at_infinity && differential_order(CurvePoint::infinity()) < 0) {
      report.violations.push_back("omega has a pole at inf");
    }
  }
  for (const auto& w : spec.tyurin) {
    const SeriesMatrix s = expand_differential_at(f, w.gamma, 2);
    WeakConnectionData data{w.gamma, w.active(), s.coefficient(-1), {}, {}};
    const int lowest = std::min(s.valuation(), 2);
    if (lowest < (w.active() ? -1 : 0)) {
      report.violations.push_back("omega has a pole of order " + std::to_string(-lowest) + " at " + w.gamma.str());
    } else if (w.active()) {
      check_weak_point(spec.algebra, w.alpha, s, data, report.violations);
    }
    report.points.push_back(std::move(data));
  }
  return report;
}

GradedVectorField vector_field_basis(const AlgebraSpec& spec, int n) {
  const Curve& curve = spec.curve;
  const int g = curve.genus();
  const Divisor ref = negated(reference_divisor(curve));
  const LaurentSeries frame = expand_differential_at(Differential{FieldElement::constant(curve, Scalar(1))}, spec.p_plus, 1);
  const int target = n + 1 + frame.valuation();
  for (int relax = 0; relax <= 1; ++relax) {
    Divisor d;
    d.set(spec.p_plus, -(n + 1));
    d.set(spec.p_minus, n - 1 + 3 * g + relax);
    d = d + ref;
    for (const auto& h : rr_space(curve, d)) {
      const Scalar c = expansion_coefficients(h, spec.p_plus, target, target + 1)[0];
      if (c.is_zero()) continue;
      return {n, VectorFieldElement{h * (frame.leading() / c)}, relax};
    }
  }
  throw NonGenericDegree("no vector field of degree " + std::to_string(n) + " after relaxing the bound at P-");
}

MatrixFunction covariant_derivative(const VectorFieldElement& e, const MatrixFunction& l, const ConnectionForm& omega) {
  return l.derivative() * e.h + bracket(omega.F * e.h, l);
}

}  // namespace laxwb
