#include "laxwb/laxalg/membership.hpp"

#include <algorithm>
#include <set>

#include "laxwb/errors.hpp"

namespace laxwb {

namespace {

Polynomial strip_roots(Polynomial q, const std::set<Scalar>& roots) {
  for (const auto& u : roots) {
    const Polynomial lin = Polynomial::x() - Polynomial(u);
    while (q.degree() > 0 && q.evaluate(u).is_zero()) q = q.exact_div(lin);
  }
  return q;
}

ScalarVector outer_column(const ScalarVector& a, const Scalar& c) { return a * c; }

ScalarMatrix outer(const ScalarVector& a, const ScalarVector& b) {
  const int n = static_cast<int>(a.size());
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return m;
}

int pivot_of(const ScalarVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

[[noreturn]] void fail(const std::string& what, const CurvePoint& p) {
  throw NotMember(what + " at " + p.str());
}

Scalar eigen_witness(const ScalarMatrix& l0, const ScalarVector& alpha, const CurvePoint& p) {
  const int piv = pivot_of(alpha);
  const ScalarVector v = l0 * alpha;
  const Scalar kappa = v[static_cast<std::size_t>(piv)] / alpha[static_cast<std::size_t>(piv)];
  if (!(v == outer_column(alpha, kappa))) fail("alpha is not an eigenvector of L_0", p);
  return kappa;
}

}  // namespace

void check_pole_support(const MatrixFunction& l, const std::vector<CurvePoint>& free_points,
                        const std::map<CurvePoint, int>& bounds, const std::string& what) {
  std::set<Scalar> xs;
  std::set<CurvePoint> candidates = {CurvePoint::infinity()};
  auto add_point = [&](const CurvePoint& p) {
    if (p.is_infinity()) return;
    xs.insert(p.x());
    candidates.insert(p);
    candidates.insert(p.conjugate());
  };
  for (const auto& p : free_points) add_point(p);
  for (const auto& [p, b] : bounds) add_point(p);
  for (const auto& f : l.entries()) {
    if (f.is_zero()) continue;
    for (const RationalFunction* r : {&f.a(), &f.b()}) {
      if (!strip_roots(r->den(), xs).is_constant()) {
        throw NotMember(what + ": pole away from the weak points and P+-, in " + f.str());
      }
    }
  }
  for (const auto& q : candidates) {
    if (std::find(free_points.begin(), free_points.end(), q) != free_points.end()) continue;
    auto it = bounds.find(q);
    const int bound = it == bounds.end() ? 0 : it->second;
    for (const auto& f : l.entries()) {
      if (f.is_zero()) continue;
      if (order_at(f, q) < -bound) {
        throw NotMember(what + ": pole order exceeds " + std::to_string(bound) + " at " + q.str() + " in " + f.str());
      }
    }
  }
}

TyurinExpansionReport verify_membership(const MatrixFunction& l, const AlgebraSpec& spec) {
  spec.validate();
  const AlgebraType& alg = spec.algebra;
  const int n = alg.size();
  if (l.size() != n) throw NotMember("matrix size does not match " + alg.name());

  // Values in the algebra, identically in the function field.
  switch (alg.kind()) {
    case AlgebraKind::gl: break;
    case AlgebraKind::sl:
      if (!l.trace().is_zero()) throw NotMember("trace is not identically zero");
      break;
    case AlgebraKind::s:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i != j && !l(i, j).is_zero()) throw NotMember("off-diagonal entry in a scalar matrix");
          if (i == j && !(l(i, i) == l(0, 0))) throw NotMember("unequal diagonal entries in a scalar matrix");
        }
      break;
    case AlgebraKind::so:
      if (!(l + l.transpose()).is_zero()) throw NotMember("not skew-symmetric");
      break;
    case AlgebraKind::sp: {
      const ScalarMatrix s = alg.sigma();
      if (!(l.transpose() * s + s * l).is_zero()) throw NotMember("L^t sigma + sigma L is not zero");
      break;
    }
  }

  std::map<CurvePoint, int> bounds;
  for (const auto& w : spec.tyurin) bounds[w.gamma] = spec.weak_pole_order(w);
  check_pole_support(l, {spec.p_plus, spec.p_minus}, bounds, "pole bound");

  TyurinExpansionReport report;
  for (const auto& w : spec.tyurin) {
    WeakPointReport wr;
    wr.gamma = w.gamma;
    wr.active = w.active();
    const int lo = -spec.weak_pole_order(w);
    const int hi = alg.kind() == AlgebraKind::sp ? 1 : 0;
    const SeriesMatrix s = expand_at(l, w.gamma, hi + 1);
    for (int k = std::min(lo, -1); k <= hi; ++k) wr.coefficients.emplace(k, s.coefficient(k));
    if (!wr.active) {
      report.points.push_back(std::move(wr));
      continue;
    }
    const ScalarVector& alpha = w.alpha;
    const int piv = pivot_of(alpha);
    const Scalar ap = alpha[static_cast<std::size_t>(piv)];
    const ScalarMatrix& r = wr.coefficients.at(-1);
    const ScalarMatrix& l0 = wr.coefficients.at(0);
    switch (alg.kind()) {
      case AlgebraKind::gl:
      case AlgebraKind::sl:
      case AlgebraKind::s: {
        ScalarVector beta(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) beta[static_cast<std::size_t>(j)] = r(piv, j) / ap;
        if (!(r == outer(alpha, beta))) fail("residue is not alpha beta^t", w.gamma);
        if (!dot(beta, alpha).is_zero()) fail("tr L_{-1} = beta^t alpha is not zero", w.gamma);
        wr.beta = beta;
        wr.kappa = eigen_witness(l0, alpha, w.gamma);
        break;
      }
      case AlgebraKind::so: {
        for (const auto& [k, c] : wr.coefficients) {
          if (!(c + c.transpose()).is_zero()) fail("expansion coefficient " + std::to_string(k) + " is not skew", w.gamma);
        }
        ScalarVector v0(static_cast<std::size_t>(n));
        v0[static_cast<std::size_t>(piv)] = ap.inverse();
        const ScalarVector beta = (r * v0) * Scalar(-1);
        if (!(r == outer(alpha, beta) - outer(beta, alpha))) fail("residue is not alpha beta^t - beta alpha^t", w.gamma);
        if (!dot(beta, alpha).is_zero()) fail("beta^t alpha is not zero", w.gamma);
        wr.beta = beta;
        wr.kappa = eigen_witness(l0, alpha, w.gamma);
        break;
      }
      case AlgebraKind::sp: {
        const ScalarMatrix sigma = alg.sigma();
        const ScalarMatrix m = outer(alpha, alpha) * sigma;
        const ScalarMatrix& l2 = wr.coefficients.at(-2);
        int pp = -1, pq = -1;
        for (int i = 0; i < n && pp < 0; ++i)
          for (int j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) { pp = i; pq = j; break; }
        const Scalar nu = l2(pp, pq) / m(pp, pq);
        if (!(l2 == m * nu)) fail("L_{-2} is not nu alpha alpha^t sigma", w.gamma);
        wr.nu = nu;
        const ScalarMatrix sm = r * (-sigma);  // L_{-1} sigma^{-1}
        ScalarVector v0(static_cast<std::size_t>(n));
        v0[static_cast<std::size_t>(piv)] = ap.inverse();
        const ScalarVector sv0 = sm * v0;
        const ScalarVector beta = sv0 + alpha * (dot(v0, sv0) * Scalar::rational(-1, 2));
        if (!(sm == outer(alpha, beta) + outer(beta, alpha))) fail("L_{-1} is not (alpha beta^t + beta alpha^t) sigma", w.gamma);
        if (!dot(beta, sigma * alpha).is_zero()) fail("beta^t sigma alpha is not zero", w.gamma);
        wr.beta = beta;
        wr.kappa = eigen_witness(l0, alpha, w.gamma);
        const ScalarMatrix& l1 = wr.coefficients.at(1);
        ScalarVector left(static_cast<std::size_t>(n));  // alpha^t sigma
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) left[static_cast<std::size_t>(i)] += alpha[static_cast<std::size_t>(k)] * sigma(k, i);
        if (!dot(left, l1 * alpha).is_zero()) fail("alpha^t sigma L_1 alpha is not zero", w.gamma);
        break;
      }
    }
    report.points.push_back(std::move(wr));
  }
  return report;
}

}  // namespace laxwb
