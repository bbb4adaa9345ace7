#include "laxwb/cocycle/cocycle.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "laxwb/errors.hpp"

namespace laxwb {

namespace {

SeriesMatrix series_derivative(const SeriesMatrix& a) {
  SeriesMatrix out{a.size, {}};
  out.entries.reserve(a.entries.size());
  for (const auto& e : a.entries) out.entries.push_back(ls_derivative(e));
  return out;
}

// tr(A (dB/dt + [W, B])) with W the dt-coefficient of omega.
LaurentSeries gamma1_integrand(const SeriesMatrix& a, const SeriesMatrix& b, const SeriesMatrix& w) {
  return series_trace(a * (series_derivative(b) + series_bracket(w, b)));
}

LaurentSeries gamma2_integrand(const SeriesMatrix& a, const SeriesMatrix& b) {
  return series_trace(a) * ls_derivative(series_trace(b));
}

// Precisions at P+ that determine the residue of either integrand for inputs
// of orders va, vb: a to 1 - vb, b to 1 - va, omega to -va - vb.
struct Precisions {
  int a, b, omega;
};

Precisions residue_precisions(int va, int vb) {
  return {std::max(1 - vb, va + 1), std::max(1 - va, vb + 1), std::max(-va - vb, 1)};
}

// The integrand of gamma1 as a function f with the 1-form f * eta0.
FieldElement gamma1_function(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega) {
  return (l * (lp.derivative() + bracket(omega.F, lp))).trace();
}

Scalar residue_of(const FieldElement& f, const CurvePoint& p) {
  if (f.is_zero()) return Scalar();
  return expand_differential_at(Differential{f}, p, 0).coeff(-1);
}

}  // namespace

std::string cocycle_name(CocycleKind kind) { return kind == CocycleKind::gamma1 ? "gamma1" : "gamma2"; }

CocycleKind parse_cocycle(const std::string& name) {
  if (name == "gamma1") return CocycleKind::gamma1;
  if (name == "gamma2") return CocycleKind::gamma2;
  throw std::invalid_argument("unknown cocycle '" + name + "' (expected gamma1 or gamma2)");
}

Scalar gamma1(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega, const AlgebraSpec& spec) {
  if (l.is_zero() || lp.is_zero()) return Scalar();
  const Precisions p = residue_precisions(order_at(l, spec.p_plus), order_at(lp, spec.p_plus));
  const SeriesMatrix w = expand_differential_at(omega.F, spec.p_plus, p.omega);
  return ls_residue(gamma1_integrand(expand_at(l, spec.p_plus, p.a), expand_at(lp, spec.p_plus, p.b), w));
}

Scalar gamma2(const MatrixFunction& l, const MatrixFunction& lp, const AlgebraSpec& spec) {
  if (l.is_zero() || lp.is_zero()) return Scalar();
  const Precisions p = residue_precisions(order_at(l, spec.p_plus), order_at(lp, spec.p_plus));
  return ls_residue(gamma2_integrand(expand_at(l, spec.p_plus, p.a), expand_at(lp, spec.p_plus, p.b)));
}

Scalar ResidueReport::total() const {
  Scalar s = at_plus + at_minus;
  for (const auto& r : at_weak) s += r;
  return s;
}

std::vector<Scalar> weak_point_residues(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega,
                                        const AlgebraSpec& spec) {
  const FieldElement f = gamma1_function(l, lp, omega);
  std::vector<Scalar> out;
  for (const auto& w : spec.tyurin) out.push_back(residue_of(f, w.gamma));
  return out;
}

ResidueReport gamma1_residues(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega,
                              const AlgebraSpec& spec) {
  const FieldElement f = gamma1_function(l, lp, omega);
  ResidueReport r;
  r.at_plus = residue_of(f, spec.p_plus);
  r.at_minus = residue_of(f, spec.p_minus);
  for (const auto& w : spec.tyurin) r.at_weak.push_back(residue_of(f, w.gamma));
  return r;
}

struct CocycleEvaluator::Cache {
  std::mutex mutex;
  std::map<std::pair<GradedIndex, GradedIndex>, Scalar> values;
  std::optional<SeriesMatrix> omega;
};

CocycleEvaluator::CocycleEvaluator(LaxAlgebra lax, CocycleKind kind, ConnectionForm omega)
    : lax_(std::move(lax)), kind_(kind), omega_(std::move(omega)), cache_(std::make_shared<Cache>()) {}

SeriesMatrix CocycleEvaluator::connection_series(int prec) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->omega || cache_->omega->precision() < prec) {
    const int target = std::max(prec, cache_->omega ? cache_->omega->precision() + 8 : prec);
    cache_->omega = expand_differential_at(omega_.F, lax_.spec().p_plus, target);
  }
  return cache_->omega->truncated(prec);
}

Scalar CocycleEvaluator::on_series(const SeriesMatrix& a, const SeriesMatrix& b) const {
  if (kind_ == CocycleKind::gamma2) return ls_residue(gamma2_integrand(a, b));
  const int need = std::max(1, -a.valuation() - b.valuation());
  return ls_residue(gamma1_integrand(a, b, connection_series(need)));
}

Scalar CocycleEvaluator::on_basis(const GradedIndex& a, const GradedIndex& b) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find({a, b});
    if (it != cache_->values.end()) return it->second;
  }
  const Precisions p = residue_precisions(a.first, b.first);
  const Scalar v = on_series(lax_.expansion_at_plus(a.first, a.second, p.a), lax_.expansion_at_plus(b.first, b.second, p.b));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(std::make_pair(a, b), v);
  return v;
}

Scalar CocycleEvaluator::on_coordinates(const GradedCoordinates& a, const GradedCoordinates& b) const {
  Scalar s;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) s += cx * cy * on_basis(x, y);
  return s;
}

Scalar CocycleEvaluator::on_bracket(const GradedIndex& a, const GradedIndex& b, const GradedIndex& c) const {
  const int vab = a.first + b.first;
  const Precisions p = residue_precisions(vab, c.first);
  const SeriesMatrix sa = lax_.expansion_at_plus(a.first, a.second, p.a - b.first);
  const SeriesMatrix sb = lax_.expansion_at_plus(b.first, b.second, p.a - a.first);
  const SeriesMatrix sc = lax_.expansion_at_plus(c.first, c.second, p.b);
  return on_series(series_bracket(sa, sb), sc);
}

}  // namespace laxwb
