#include "laxwb/laxalg/constraints.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "laxwb/curve/expansion.hpp"
#include "laxwb/curve/riemann_roch.hpp"
#include "laxwb/errors.hpp"

namespace laxwb {

namespace {

using LinearForm = std::vector<LocalTerm>;

LinearForm entry(int order, int i, int j, const Scalar& w = Scalar(1)) { return {{order, i, j, w}}; }

LinearForm scaled(const LinearForm& f, const Scalar& c) {
  LinearForm r;
  for (const auto& t : f) r.push_back({t.order, t.row, t.col, t.weight * c});
  return r;
}

LinearForm sum(const LinearForm& a, const LinearForm& b) {
  LinearForm r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

int pivot_of(const ScalarVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

// (C_order * v)_i as linear forms, where C_order is the coefficient matrix
// optionally multiplied on the right by a constant matrix `right`.
std::vector<LinearForm> times_vector(int order, int size, const ScalarVector& v, const ScalarMatrix* right = nullptr) {
  std::vector<LinearForm> u(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      // (C right)_{ij} = sum_l C_{il} right_{lj}
      if (right == nullptr) {
        if (!v[static_cast<std::size_t>(j)].is_zero()) u[static_cast<std::size_t>(i)].push_back({order, i, j, v[static_cast<std::size_t>(j)]});
        continue;
      }
      for (int l = 0; l < size; ++l) {
        const Scalar w = (*right)(l, j) * v[static_cast<std::size_t>(j)];
        if (!w.is_zero()) u[static_cast<std::size_t>(i)].push_back({order, i, l, w});
      }
    }
  }
  return u;
}

// u in span(alpha) via alpha[p] u_i - alpha[i] u_p = 0.
void span_conditions(const std::vector<LinearForm>& u, const ScalarVector& alpha, const std::string& tag,
                     std::vector<LocalCondition>& out) {
  const int p = pivot_of(alpha);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (static_cast<int>(i) == p) continue;
    LinearForm f = sum(scaled(u[i], alpha[static_cast<std::size_t>(p)]), scaled(u[static_cast<std::size_t>(p)], -alpha[i]));
    out.push_back({std::move(f), Scalar(0), tag});
  }
}

std::vector<ScalarVector> orthogonal_complement(const ScalarVector& alpha) {
  ScalarMatrix row(1, static_cast<int>(alpha.size()));
  for (std::size_t j = 0; j < alpha.size(); ++j) row(0, static_cast<int>(j)) = alpha[j];
  return nullspace(row);
}

ScalarMatrix inverse_sigma(const AlgebraType& algebra) { return -algebra.sigma(); }

void eigen_conditions(int order, int size, const ScalarVector& alpha, std::vector<LocalCondition>& out) {
  span_conditions(times_vector(order, size, alpha), alpha, "coefficient 0 has alpha as eigenvector", out);
}

}  // namespace

std::vector<LocalCondition> lax_conditions(const AlgebraType& algebra, const ScalarVector& alpha) {
  std::vector<LocalCondition> out;
  const int n = algebra.size();
  switch (algebra.kind()) {
    case AlgebraKind::gl:
    case AlgebraKind::sl:
    case AlgebraKind::s: {
      for (int j = 0; j < n; ++j) {
        std::vector<LinearForm> col;
        for (int i = 0; i < n; ++i) col.push_back(entry(-1, i, j));
        span_conditions(col, alpha, "residue column in span(alpha)", out);
      }
      LinearForm tr;
      for (int i = 0; i < n; ++i) tr.push_back({-1, i, i, Scalar(1)});
      out.push_back({tr, Scalar(0), "residue is traceless"});
      eigen_conditions(0, n, alpha, out);
      break;
    }
    case AlgebraKind::so: {
      const auto ra = times_vector(-1, n, alpha);
      for (const auto& f : ra) out.push_back({f, Scalar(0), "residue annihilates alpha"});
      for (const auto& v : orthogonal_complement(alpha)) {
        span_conditions(times_vector(-1, n, v), alpha, "residue maps alpha-perp into span(alpha)", out);
      }
      eigen_conditions(0, n, alpha, out);
      break;
    }
    case AlgebraKind::sp: {
      const ScalarMatrix sigma = algebra.sigma();
      // L_{-2} proportional to M = alpha alpha^t sigma.
      ScalarMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Scalar acc;
          for (int l = 0; l < n; ++l) acc += alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(l)] * sigma(l, j);
          m(i, j) = acc;
        }
      int pp = -1, pq = -1;
      for (int i = 0; i < n && pp < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (!m(i, j).is_zero()) { pp = i; pq = j; break; }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == pp && j == pq) continue;
          out.push_back({sum(entry(-2, i, j, m(pp, pq)), entry(-2, pp, pq, -m(i, j))), Scalar(0),
                         "order-two coefficient proportional to alpha alpha^t sigma"});
        }
      const ScalarMatrix sinv = inverse_sigma(algebra);
      for (const auto& v : orthogonal_complement(alpha)) {
        span_conditions(times_vector(-1, n, v, &sinv), alpha, "residue sigma^-1 maps alpha-perp into span(alpha)", out);
      }
      for (const auto& f : times_vector(-1, n, alpha)) out.push_back({f, Scalar(0), "residue annihilates alpha"});
      eigen_conditions(0, n, alpha, out);
      LinearForm top;
      for (int i = 0; i < n; ++i) {
        Scalar wi;  // (alpha^t sigma)_i
        for (int l = 0; l < n; ++l) wi += alpha[static_cast<std::size_t>(l)] * sigma(l, i);
        for (int j = 0; j < n; ++j) {
          const Scalar w = wi * alpha[static_cast<std::size_t>(j)];
          if (!w.is_zero()) top.push_back({1, i, j, w});
        }
      }
      out.push_back({top, Scalar(0), "alpha^t sigma L_1 alpha = 0"});
      break;
    }
  }
  return out;
}

std::vector<LocalCondition> connection_conditions(const AlgebraType& algebra, const ScalarVector& alpha) {
  std::vector<LocalCondition> out;
  const int n = algebra.size();
  switch (algebra.kind()) {
    case AlgebraKind::gl:
    case AlgebraKind::sl:
    case AlgebraKind::s: {
      for (int j = 0; j < n; ++j) {
        std::vector<LinearForm> col;
        for (int i = 0; i < n; ++i) col.push_back(entry(-1, i, j));
        span_conditions(col, alpha, "residue column in span(alpha)", out);
      }
      LinearForm tr;
      for (int i = 0; i < n; ++i) tr.push_back({-1, i, i, Scalar(1)});
      out.push_back({tr, Scalar(1), "residue has trace one"});
      eigen_conditions(0, n, alpha, out);
      break;
    }
    case AlgebraKind::so:
    case AlgebraKind::sp: {
      const auto ra = times_vector(-1, n, alpha);
      for (std::size_t i = 0; i < ra.size(); ++i) out.push_back({ra[i], alpha[i], "residue fixes alpha"});
      const ScalarMatrix sinv = inverse_sigma(algebra);
      const ScalarMatrix* right = algebra.kind() == AlgebraKind::sp ? &sinv : nullptr;
      for (const auto& v : orthogonal_complement(alpha)) {
        span_conditions(times_vector(-1, n, v, right), alpha, "residue maps alpha-perp into span(alpha)", out);
      }
      eigen_conditions(0, n, alpha, out);
      if (algebra.kind() == AlgebraKind::sp) {
        const ScalarMatrix sigma = algebra.sigma();
        LinearForm top;
        for (int i = 0; i < n; ++i) {
          Scalar wi;
          for (int l = 0; l < n; ++l) wi += alpha[static_cast<std::size_t>(l)] * sigma(l, i);
          for (int j = 0; j < n; ++j) {
            const Scalar w = wi * alpha[static_cast<std::size_t>(j)];
            if (!w.is_zero()) top.push_back({1, i, j, w});
          }
        }
        out.push_back({top, Scalar(0), "alpha^t sigma omega_1 alpha = 0"});
      }
      break;
    }
  }
  return out;
}

MatrixFunction ConstraintSystem::assemble(const ScalarVector& coords) const {
  const int size = matrices.empty() ? 0 : matrices.front().rows();
  MatrixFunction out(curve, size);
  const std::size_t d = functions.size();
  for (std::size_t r = 0; r < matrices.size(); ++r) {
    FieldElement f(curve);
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& c = coords[r * d + k];
      if (!c.is_zero()) f += functions[k] * c;
    }
    if (!f.is_zero()) out += MatrixFunction::from_constant(curve, matrices[r], f);
  }
  return out;
}

ConstraintSystem build_constraint_system(const Curve& curve, const Divisor& divisor,
                                         const std::vector<ScalarMatrix>& matrices,
                                         const std::vector<WeakConditions>& weak, bool differential) {
  ConstraintSystem sys{curve, divisor, rr_space(curve, divisor), matrices, {}, {}, {}};
  const std::size_t d = sys.functions.size();
  sys.equations = ScalarMatrix(0, sys.unknowns());
  if (d == 0) {
    // Only the zero matrix: inhomogeneous conditions become 0 = rhs.
    for (const auto& w : weak)
      for (const auto& c : w.conditions)
        if (!c.rhs.is_zero()) {
          sys.equations.append_row(ScalarVector{});
          sys.rhs.push_back(c.rhs);
          sys.tags.push_back(c.tag + " at " + w.point.str());
        }
    return sys;
  }
  for (const auto& w : weak) {
    if (w.conditions.empty()) continue;
    int lo = INT_MAX, hi = INT_MIN;
    for (const auto& c : w.conditions)
      for (const auto& t : c.terms) {
        lo = std::min(lo, t.order);
        hi = std::max(hi, t.order);
      }
    // coeff[k][e - lo]: coefficient of t^e for the k-th function at this point.
    std::vector<std::vector<Scalar>> coeff;
    coeff.reserve(d);
    for (const auto& f : sys.functions) {
      if (!differential) {
        coeff.push_back(expansion_coefficients(f, w.point, lo, hi + 1));
        continue;
      }
      const LaurentSeries s = expand_differential_at(Differential{f}, w.point, hi + 1);
      std::vector<Scalar> c;
      for (int e = lo; e <= hi; ++e) c.push_back(s.coeff(e));
      coeff.push_back(std::move(c));
    }
    for (const auto& c : w.conditions) {
      ScalarVector row(static_cast<std::size_t>(sys.unknowns()));
      for (const auto& t : c.terms) {
        for (std::size_t r = 0; r < matrices.size(); ++r) {
          const Scalar& x = matrices[r](t.row, t.col);
          if (x.is_zero()) continue;
          const Scalar wx = t.weight * x;
          for (std::size_t k = 0; k < d; ++k) {
            const Scalar& b = coeff[k][static_cast<std::size_t>(t.order - lo)];
            if (!b.is_zero()) row[r * d + k] += wx * b;
          }
        }
      }
      sys.equations.append_row(row);
      sys.rhs.push_back(c.rhs);
      sys.tags.push_back(c.tag + " at " + w.point.str());
    }
  }
  return sys;
}

Divisor degree_divisor(const AlgebraSpec& spec, int m, int relax) {
  Divisor d;
  d.set(spec.p_plus, -m);
  d.set(spec.p_minus, m + spec.curve.genus() + relax);
  for (const auto& w : spec.tyurin) d.set(w.gamma, spec.weak_pole_order(w));
  return d;
}

ConstraintSystem assemble_constraints(const AlgebraSpec& spec, int m, int relax) {
  spec.validate();
  std::vector<WeakConditions> weak;
  for (const auto& w : spec.tyurin) {
    if (w.active()) weak.push_back({w.gamma, lax_conditions(spec.algebra, w.alpha)});
  }
  return build_constraint_system(spec.curve, degree_divisor(spec, m, relax), matrix_basis(spec.algebra), weak, false);
}

}  // namespace laxwb
