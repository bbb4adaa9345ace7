#include "laxwb/curve/riemann_roch.hpp"

#include <algorithm>
#include <set>

#include "laxwb/curve/expansion.hpp"
#include "laxwb/exactnum/linear_algebra.hpp"

namespace laxwb {

namespace {

struct Monomial {
  int power;   // of the coordinate
  bool has_y;  // times y
  int pole;    // pole order at infinity
};

std::vector<Monomial> monomials_up_to(const Curve& curve, int bound) {
  std::vector<Monomial> out;
  if (curve.genus() == 0) {
    for (int i = 0; i <= bound; ++i) out.push_back({i, false, i});
    return out;
  }
  for (int pole = 0; pole <= bound; ++pole) {
    if (pole == 1) continue;
    if (pole % 2 == 0) out.push_back({pole / 2, false, pole});
    else out.push_back({(pole - 3) / 2, true, pole});
  }
  return out;
}

FieldElement monomial_function(const Curve& curve, const Monomial& m) {
  const RationalFunction xp(Polynomial::monomial(Scalar(1), m.power));
  if (m.has_y) return FieldElement(curve, RationalFunction(), xp);
  return FieldElement(curve, xp);
}

}  // namespace

std::vector<FieldElement> rr_space(const Curve& curve, const Divisor& d) {
  // Exponent of (x - u) needed to clear the finite poles lying over u.
  std::map<Scalar, int> clear;
  for (const auto& [p, c] : d.terms()) {
    if (p.is_infinity()) continue;
    int e = 0;
    if (curve.genus() == 1 && p.y().is_zero()) e = (c + 1) / 2;
    else e = std::max(c, d[p.conjugate()]);
    auto& slot = clear[p.x()];
    slot = std::max({slot, e, 0});
  }
  Polynomial h(Scalar(1));
  int shift = 0;
  for (const auto& [u, e] : clear) {
    if (e == 0) continue;
    h = h * (Polynomial::x() - Polynomial(u)).pow(e);
    shift += e * (curve.genus() == 1 ? 2 : 1);
  }
  const int bound = d[CurvePoint::infinity()] + shift;
  if (bound < 0) return {};

  const std::vector<Monomial> monos = monomials_up_to(curve, bound);
  std::vector<FieldElement> funcs;
  funcs.reserve(monos.size());
  for (const auto& m : monos) funcs.push_back(monomial_function(curve, m));

  // Finite points where g = f h must vanish: ord_Q(g) >= ord_Q(h) - D(Q).
  std::set<CurvePoint> points;
  for (const auto& [p, c] : d.terms()) {
    if (p.is_infinity()) continue;
    points.insert(p);
    points.insert(p.conjugate());
  }
  const RationalFunction hr(h);
  ScalarMatrix system(0, static_cast<int>(funcs.size()));
  for (const auto& q : points) {
    const int need = (h.is_constant() ? 0 : order_at(curve, hr, q)) - d[q];
    if (need <= 0) continue;
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(funcs.size());
    for (const auto& f : funcs) cols.push_back(expansion_coefficients(f, q, 0, need));
    for (int e = 0; e < need; ++e) {
      ScalarVector row(funcs.size());
      for (std::size_t j = 0; j < funcs.size(); ++j) row[j] = cols[j][static_cast<std::size_t>(e)];
      system.append_row(row);
    }
  }

  std::vector<ScalarVector> kernel;
  if (system.rows() == 0) {
    for (std::size_t j = 0; j < funcs.size(); ++j) {
      ScalarVector v(funcs.size());
      v[j] = Scalar(1);
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = nullspace(system);
  }
  std::vector<int> order(funcs.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  const std::vector<ScalarVector> basis = echelon_basis(kernel, order);

  const FieldElement hinv = FieldElement(curve, RationalFunction(Polynomial(Scalar(1)), h));
  std::vector<FieldElement> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    FieldElement g(curve);
    for (std::size_t j = 0; j < funcs.size(); ++j) {
      if (!v[j].is_zero()) g += funcs[j] * v[j];
    }
    out.push_back(g * hinv);
  }
  return out;
}

}  // namespace laxwb
