#include <algorithm>
#include <mutex>
#include <random>

#include "laxwb/cocycle/cocycle.hpp"
#include "laxwb/errors.hpp"
#include "laxwb/laxalg/membership.hpp"

namespace laxwb {

namespace {

std::string show(const GradedIndex& x) { return "X_" + std::to_string(x.first) + "^" + std::to_string(x.second); }

SeriesMatrix series_derivative(const SeriesMatrix& a) {
  SeriesMatrix out{a.size, {}};
  for (const auto& e : a.entries) out.entries.push_back(ls_derivative(e));
  return out;
}

void accumulate(GradedCoordinates& into, const GradedCoordinates& add, const Scalar& c) {
  for (const auto& [idx, v] : add) {
    Scalar& slot = into[idx];
    slot += v * c;
    if (slot.is_zero()) into.erase(idx);
  }
}

GradedCoordinates bracket_of(const LaxAlgebra& lax, const GradedIndex& a, const GradedIndex& b) {
  return lax.bracket_coordinates(a.first, a.second, b.first, b.second);
}

// [u, b] for u given in graded coordinates.
GradedCoordinates bracket_of(const LaxAlgebra& lax, const GradedCoordinates& u, const GradedIndex& b) {
  GradedCoordinates out;
  for (const auto& [x, c] : u) accumulate(out, bracket_of(lax, x, b), c);
  return out;
}

Scalar form_on(const GradedForm& gamma, const GradedCoordinates& u, const GradedIndex& b) {
  Scalar s;
  for (const auto& [x, c] : u) s += c * gamma(x, b);
  return s;
}

std::string show(const GradedCoordinates& c) {
  std::string s;
  for (const auto& [idx, v] : c) s += (s.empty() ? "" : " + ") + v.str() + " " + show(idx);
  return s.empty() ? "0" : s;
}

}  // namespace

Scalar CocycleTable::at(const GradedIndex& a, const GradedIndex& b) const {
  auto it = entries.find({a, b});
  return it == entries.end() ? Scalar() : it->second;
}

CocycleTable cocycle_table(const CocycleEvaluator& gamma, int lo, int hi) {
  CocycleTable t;
  t.kind = gamma.kind();
  t.window_min = lo;
  t.window_max = hi;
  const int dim = gamma.algebra().dimension();
  for (int m = lo; m <= hi; ++m)
    for (int k = lo; k <= hi; ++k)
      for (int r = 0; r < dim; ++r)
        for (int s = 0; s < dim; ++s) {
          const Scalar v = gamma.on_basis({m, r}, {k, s});
          if (v.is_zero()) continue;
          t.entries.emplace(std::make_pair(GradedIndex{m, r}, GradedIndex{k, s}), v);
          if (t.empty_band) {
            t.band_low = t.band_high = m + k;
            t.empty_band = false;
          }
          t.band_low = std::min(t.band_low, m + k);
          t.band_high = std::max(t.band_high, m + k);
        }
  return t;
}

GradedForm form_of(const CocycleEvaluator& gamma) {
  return [gamma](const GradedIndex& a, const GradedIndex& b) { return gamma.on_basis(a, b); };
}

GradedForm form_of(const CocycleTable& table, const CocycleEvaluator& fallback) {
  return [table, fallback](const GradedIndex& a, const GradedIndex& b) {
    if (table.in_window(a) && table.in_window(b)) return table.at(a, b);
    return fallback.on_basis(a, b);
  };
}

std::vector<Triple> sample_triples(int dimension, int lo, int hi, int count, unsigned seed) {
  std::mt19937 engine(seed);
  const auto span = static_cast<std::uint32_t>(hi - lo + 1);
  auto pick = [&]() -> GradedIndex {
    const int m = lo + static_cast<int>(engine() % span);
    const int r = static_cast<int>(engine() % static_cast<std::uint32_t>(dimension));
    return {m, r};
  };
  std::vector<Triple> out;
  for (int i = 0; i < count; ++i) {
    const GradedIndex a = pick();
    const GradedIndex b = pick();
    out.push_back({a, b, pick()});
  }
  return out;
}

std::vector<Pair> level_pairs(int dimension, int lo, int hi, int level_lo, int level_hi) {
  std::vector<Pair> out;
  for (int m = lo; m <= hi; ++m)
    for (int k = lo; k <= hi; ++k) {
      if (m + k < level_lo || m + k > level_hi) continue;
      for (int r = 0; r < dimension; ++r)
        for (int s = 0; s < dimension; ++s) out.push_back({{m, r}, {k, s}});
    }
  return out;
}

void PropertyReport::merge(const PropertyReport& o) {
  checked += o.checked;
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

PropertyReport check_graded_basis(const LaxAlgebra& lax, int lo, int hi) {
  PropertyReport rep;
  for (int m = lo; m <= hi; ++m) {
    ++rep.checked;
    const int dim = static_cast<int>(lax.graded_basis(m).size());
    if (dim != lax.dimension())
      rep.violations.push_back("degree " + std::to_string(m) + " has dimension " + std::to_string(dim));
    for (const auto& e : lax.graded_basis(m)) {
      ++rep.checked;
      try {
        verify_membership(e.value, lax.spec());
      } catch (const NotMember& err) {
        rep.violations.push_back(show(GradedIndex{e.degree, e.index}) + ": " + err.what());
      }
    }
  }
  return rep;
}

PropertyReport check_closure(const LaxAlgebra& lax, int lo, int hi) {
  PropertyReport rep;
  const int dim = lax.dimension();
  for (int m = lo; m <= hi; ++m)
    for (int r = 0; r < dim; ++r)
      for (int k = m; k <= hi; ++k)
        for (int s = k == m ? r + 1 : 0; s < dim; ++s) {
          ++rep.checked;
          const GradedIndex a{m, r}, b{k, s};
          const MatrixFunction f = bracket(lax.element(m, r).value, lax.element(k, s).value);
          try {
            verify_membership(f, lax.spec());
          } catch (const NotMember& err) {
            rep.violations.push_back("[" + show(a) + ", " + show(b) + "]: " + err.what());
            continue;
          }
          if (!(lax.combine(bracket_of(lax, a, b)) == f))
            rep.violations.push_back("[" + show(a) + ", " + show(b) + "] differs from its structure constants");
        }
  return rep;
}

PropertyReport check_splitting(const LaxAlgebra& lax, int lo, int hi) {
  PropertyReport rep;
  const AlgebraSpec& spec = lax.spec();
  const int n = spec.algebra.n();
  const AlgebraSpec scalar = spec.with_algebra(AlgebraType(AlgebraKind::s, n));
  const AlgebraSpec traceless = spec.with_algebra(AlgebraType(AlgebraKind::sl, n));
  for (int m = lo; m <= hi; ++m)
    for (const auto& e : lax.graded_basis(m)) {
      ++rep.checked;
      const FieldElement t = e.value.trace() * Scalar(1 / mpq_class(n));
      const MatrixFunction center = MatrixFunction::from_constant(spec.curve, ScalarMatrix::identity(n), t);
      const MatrixFunction rest = e.value - center;
      if (!(rest.trace().is_zero())) rep.violations.push_back(show(GradedIndex{m, e.index}) + ": traceless part has a trace");
      try {
        if (!center.is_zero()) verify_membership(center, scalar);
        if (!rest.is_zero()) verify_membership(rest, traceless);
      } catch (const NotMember& err) {
        rep.violations.push_back(show(GradedIndex{m, e.index}) + ": " + err.what());
      }
    }
  return rep;
}

PropertyReport check_jacobi(const LaxAlgebra& lax, const std::vector<Triple>& triples) {
  PropertyReport rep;
  for (const auto& [a, b, c] : triples) {
    ++rep.checked;
    GradedCoordinates sum = bracket_of(lax, bracket_of(lax, a, b), c);
    accumulate(sum, bracket_of(lax, bracket_of(lax, b, c), a), Scalar(1));
    accumulate(sum, bracket_of(lax, bracket_of(lax, c, a), b), Scalar(1));
    if (!sum.empty())
      rep.violations.push_back("Jacobi identity fails on " + show(a) + ", " + show(b) + ", " + show(c) + ": " + show(sum));
  }
  return rep;
}

PropertyReport check_antisymmetry(const CocycleTable& table) {
  PropertyReport rep;
  for (const auto& [key, v] : table.entries) {
    ++rep.checked;
    if (key.first == key.second) {
      rep.violations.push_back("gamma(" + show(key.first) + ", " + show(key.first) + ") = " + v.str());
    } else if (!(table.at(key.second, key.first) == -v)) {
      rep.violations.push_back("gamma is not antisymmetric on " + show(key.first) + ", " + show(key.second));
    }
  }
  return rep;
}

PropertyReport check_cocycle_condition(const CocycleEvaluator& gamma, const std::vector<Triple>& triples) {
  PropertyReport rep;
  for (const auto& [a, b, c] : triples) {
    ++rep.checked;
    const Scalar s = gamma.on_bracket(a, b, c) + gamma.on_bracket(b, c, a) + gamma.on_bracket(c, a, b);
    if (!s.is_zero()) {
      rep.violations.push_back("cocycle sum " + s.str() + " on " + show(a) + ", " + show(b) + ", " + show(c));
    }
  }
  return rep;
}

PropertyReport check_cocycle_condition(const LaxAlgebra& lax, const GradedForm& gamma, const std::vector<Triple>& triples) {
  PropertyReport rep;
  for (const auto& [a, b, c] : triples) {
    ++rep.checked;
    const Scalar s = form_on(gamma, bracket_of(lax, a, b), c) + form_on(gamma, bracket_of(lax, b, c), a) +
                     form_on(gamma, bracket_of(lax, c, a), b);
    if (!s.is_zero()) {
      rep.violations.push_back("cocycle sum " + s.str() + " on " + show(a) + ", " + show(b) + ", " + show(c));
    }
  }
  return rep;
}

struct ModuleAction::State {
  State(LaxAlgebra l, ConnectionForm o) : lax(std::move(l)), omega(std::move(o)) {}
  LaxAlgebra lax;
  ConnectionForm omega;
  std::recursive_mutex mutex;
  std::map<int, GradedVectorField> fields;
  std::map<int, LaurentSeries> frame_coefficients;  // h / frame at P+
  std::optional<SeriesMatrix> omega_series;
  std::map<std::pair<int, GradedIndex>, GradedCoordinates> results;
};

ModuleAction::ModuleAction(LaxAlgebra lax, ConnectionForm omega)
    : state_(std::make_shared<State>(std::move(lax), std::move(omega))) {}

const LaxAlgebra& ModuleAction::algebra() const { return state_->lax; }
const ConnectionForm& ModuleAction::connection() const { return state_->omega; }

const GradedVectorField& ModuleAction::vector_field(int k) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mutex);
  auto it = state_->fields.find(k);
  if (it == state_->fields.end()) it = state_->fields.emplace(k, vector_field_basis(state_->lax.spec(), k)).first;
  return it->second;
}

SeriesMatrix ModuleAction::apply_series(int k, const GradedIndex& x, int prec) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mutex);
  const AlgebraSpec& spec = state_->lax.spec();
  const int m = x.first;
  // nabla_e X = v (dX/dt + [W, X]) with e = v d/dt and omega = W dt near P+.
  for (int margin = 2;; margin *= 2) {
    const int pv = prec - m + 1 + margin;
    auto vit = state_->frame_coefficients.find(k);
    if (vit == state_->frame_coefficients.end() || vit->second.precision() < pv) {
      const FieldElement one = FieldElement::constant(spec.curve, Scalar(1));
      const int shift = 4 + std::abs(k);
      const LaurentSeries h = expand_at(vector_field(k).value.h, spec.p_plus, pv + shift);
      const LaurentSeries frame = expand_differential_at(Differential{one}, spec.p_plus, pv + shift);
      state_->frame_coefficients[k] = h / frame;
      vit = state_->frame_coefficients.find(k);
    }
    const int pw = prec - k - 1 - m + margin;
    if (!state_->omega_series || state_->omega_series->precision() < pw) {
      state_->omega_series = expand_differential_at(state_->omega.F, spec.p_plus, std::max(pw, 1));
    }
    const SeriesMatrix sx = state_->lax.expansion_at_plus(m, x.second, prec - k + margin);
    const SeriesMatrix inner = series_derivative(sx) + series_bracket(*state_->omega_series, sx);
    const SeriesMatrix out = inner * vit->second;
    if (out.precision() >= prec) return out.truncated(prec);
    if (margin > 64) throw InsufficientPrecision("expansion of nabla_e X at P+ did not reach the requested precision");
  }
}

GradedCoordinates ModuleAction::apply(int k, const GradedIndex& x) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mutex);
  auto it = state_->results.find({k, x});
  if (it != state_->results.end()) return it->second;
  const LaxAlgebra& lax = state_->lax;
  const AlgebraSpec& spec = lax.spec();
  const int g = spec.curve.genus();
  const GradedElement& el = lax.element(x.first, x.second);
  const GradedVectorField& e = vector_field(k);
  // A priori pole bounds: e(L) gains the pole of e and one order from d;
  // [omega(e), L] the poles of omega and e; omega adds one order at each
  // active weak point.
  const int pole = el.p_minus_pole + k + 3 * g + e.relax + std::max(0, state_->omega.p_minus_pole - 1);
  int weak = 0;
  for (const auto& w : spec.tyurin)
    if (w.active()) weak += spec.weak_pole_order(w) + 1;
  const SeriesMatrix s = apply_series(k, x, lax.certificate_precision(pole, weak));
  GradedCoordinates c = lax.decompose_series(s, pole, weak);
  state_->results.emplace(std::make_pair(k, x), c);
  return c;
}

PropertyReport check_module_grading(const ModuleAction& action, const std::vector<int>& ks,
                                    const std::vector<GradedIndex>& elements) {
  PropertyReport rep;
  for (int k : ks) {
    for (const auto& x : elements) {
      ++rep.checked;
      const GradedCoordinates c = action.apply(k, x);
      const int lead = x.first + k;
      for (const auto& [idx, v] : c) {
        if (idx.first < lead) {
          rep.violations.push_back("nabla_e" + std::to_string(k) + " " + show(x) + " has a term below degree " +
                                   std::to_string(lead) + ": " + show(c));
          break;
        }
        if (idx.first != lead) continue;
        const Scalar expected = idx.second == x.second ? Scalar(x.first) : Scalar();
        if (!(v == expected)) {
          rep.violations.push_back("nabla_e" + std::to_string(k) + " " + show(x) + " has coefficient " + v.str() +
                                   " at " + show(idx));
        }
      }
      if (x.first != 0 && !c.count({lead, x.second})) {
        rep.violations.push_back("nabla_e" + std::to_string(k) + " " + show(x) + " lacks the leading term " +
                                 std::to_string(x.first) + " " + show(GradedIndex{lead, x.second}));
      }
    }
  }
  return rep;
}

PropertyReport check_derivation(const ModuleAction& action, const std::vector<int>& ks, const std::vector<Triple>& triples) {
  PropertyReport rep;
  const LaxAlgebra& lax = action.algebra();
  for (int k : ks) {
    for (const auto& t : triples) {
      ++rep.checked;
      GradedCoordinates lhs;
      for (const auto& [h, c] : bracket_of(lax, t.a, t.b)) accumulate(lhs, action.apply(k, h), c);
      GradedCoordinates rhs = bracket_of(lax, action.apply(k, t.a), t.b);
      GradedCoordinates right_term = bracket_of(lax, action.apply(k, t.b), t.a);
      accumulate(rhs, right_term, Scalar(-1));
      if (!(lhs == rhs)) {
        rep.violations.push_back("derivation identity fails for e" + std::to_string(k) + " on " + show(t.a) + ", " +
                                 show(t.b));
      }
    }
  }
  return rep;
}

PropertyReport check_l_invariance(const GradedForm& gamma, const ModuleAction& action, const std::vector<int>& ks,
                                  const std::vector<Pair>& pairs) {
  PropertyReport rep;
  for (int k : ks) {
    for (const auto& [a, b] : pairs) {
      ++rep.checked;
      Scalar s;
      for (const auto& [x, c] : action.apply(k, a)) s += c * gamma(x, b);
      for (const auto& [x, c] : action.apply(k, b)) s += c * gamma(a, x);
      if (!s.is_zero()) {
        rep.violations.push_back("gamma(nabla_e a, b) + gamma(a, nabla_e b) = " + s.str() + " for e" +
                                 std::to_string(k) + " on " + show(a) + ", " + show(b));
      }
    }
  }
  return rep;
}

RecursionReport recursion_identities(const CocycleTable& table, int dimension) {
  RecursionReport rep;
  const int lo = table.window_min, hi = table.window_max;
  auto in = [&](int m) { return m >= lo && m <= hi; };
  for (int m = lo; m <= hi; ++m)
    for (int k = lo; k <= hi; ++k) {
      if (!table.empty_band && m + k < table.band_high) continue;
      for (int r = 0; r < dimension; ++r)
        for (int s = 0; s < dimension; ++s) {
          ++rep.above_band.checked;
          if (!(table.at({m, r}, {k, s}) * Scalar(m + k)).is_zero()) {
            rep.above_band.violations.push_back("(m + k) gamma(" + show(GradedIndex{m, r}) + ", " +
                                                show(GradedIndex{k, s}) + ") is not zero");
          }
        }
    }
  if (in(1) && in(-1)) {
    for (int n = 1; in(n) && in(-n); ++n)
      for (int r = 0; r < dimension; ++r)
        for (int s = 0; s < dimension; ++s) {
          ++rep.level_zero.checked;
          if (!(table.at({n, r}, {-n, s}) == table.at({1, r}, {-1, s}) * Scalar(n))) {
            rep.level_zero.violations.push_back("gamma(" + show(GradedIndex{n, r}) + ", " + show(GradedIndex{-n, s}) +
                                                ") differs from " + std::to_string(n) + " gamma(X_1, X_-1)");
          }
        }
    for (int r = 0; r < dimension; ++r)
      for (int s = 0; s < dimension; ++s) {
        ++rep.symmetry.checked;
        if (!(table.at({1, r}, {-1, s}) == table.at({1, s}, {-1, r}))) {
          rep.symmetry.violations.push_back("gamma(X_1^" + std::to_string(r) + ", X_-1^" + std::to_string(s) +
                                            ") is not symmetric in the indices");
        }
      }
  }
  if (in(0)) {
    for (int m = std::max(lo, 0); m <= hi; ++m)
      for (int r = 0; r < dimension; ++r)
        for (int s = 0; s < dimension; ++s) {
          ++rep.zero_degree.checked;
          if (!table.at({m, r}, {0, s}).is_zero()) {
            rep.zero_degree.violations.push_back("gamma(" + show(GradedIndex{m, r}) + ", X_0^" + std::to_string(s) +
                                                 ") is not zero");
          }
        }
  }
  return rep;
}

BilinearFormOnG extract_psi(const CocycleTable& table, const AlgebraType& algebra) {
  for (const auto& [key, v] : table.entries) {
    if (key.first.first + key.second.first > 0) {
      throw PositiveLevelNonzero("gamma(" + show(key.first) + ", " + show(key.second) + ") = " + v.str() +
                                 " at a positive level");
    }
  }
  if (!table.in_window({1, 0}) || !table.in_window({-1, 0})) {
    throw std::invalid_argument("the table window does not contain the degrees 1 and -1");
  }
  const auto basis = matrix_basis(algebra);
  const int d = static_cast<int>(basis.size());
  BilinearFormOnG psi;
  psi.values = ScalarMatrix(d, d);
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) psi.values(r, s) = table.at({1, r}, {-1, s});
  auto form = [&](const ScalarVector& u, const ScalarVector& v) { return dot(u, psi.values * v); };
  std::vector<ScalarVector> unit;
  for (int r = 0; r < d; ++r) {
    ScalarVector e(static_cast<std::size_t>(d));
    e[static_cast<std::size_t>(r)] = Scalar(1);
    unit.push_back(std::move(e));
  }
  psi.symmetric = true;
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s)
      if (!(psi.values(r, s) == psi.values(s, r))) psi.symmetric = false;
  psi.invariant = true;
  for (int a = 0; a < d && psi.invariant; ++a)
    for (int b = 0; b < d && psi.invariant; ++b) {
      const ScalarMatrix& xa = basis[static_cast<std::size_t>(a)];
      const ScalarMatrix& xb = basis[static_cast<std::size_t>(b)];
      const ScalarVector ab = basis_coordinates(algebra, xa * xb - xb * xa);
      for (int c = 0; c < d; ++c) {
        const ScalarMatrix& xc = basis[static_cast<std::size_t>(c)];
        const ScalarVector bc = basis_coordinates(algebra, xb * xc - xc * xb);
        if (!(form(ab, unit[static_cast<std::size_t>(c)]) == form(unit[static_cast<std::size_t>(a)], bc))) {
          psi.invariant = false;
          break;
        }
      }
    }
  ScalarMatrix trace_form(d, d);
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) {
      const ScalarMatrix p = basis[static_cast<std::size_t>(r)] * basis[static_cast<std::size_t>(s)];
      for (int i = 0; i < p.rows(); ++i) trace_form(r, s) += p(i, i);
    }
  for (int r = 0; r < d && !psi.trace_multiple; ++r)
    for (int s = 0; s < d; ++s)
      if (!trace_form(r, s).is_zero()) {
        psi.trace_multiple = psi.values(r, s) / trace_form(r, s);
        break;
      }
  if (psi.trace_multiple && !(trace_form * *psi.trace_multiple == psi.values)) psi.trace_multiple.reset();
  return psi;
}

std::optional<IndependenceWitness> independence_witness(const CocycleTable& first, const CocycleTable& second) {
  if (first.entries.empty() || second.entries.empty()) return std::nullopt;
  for (const auto& [key, v] : second.entries)
    if (first.at(key.first, key.second).is_zero()) return IndependenceWitness{key, Scalar(), v};
  for (const auto& [key, v] : first.entries)
    if (second.at(key.first, key.second).is_zero()) return IndependenceWitness{key, v, Scalar()};
  return std::nullopt;
}

CentralExtensionTable central_extension(const StructureConstants& brackets, const CocycleTable& table) {
  CentralExtensionTable ext{brackets, {}};
  for (const auto& [key, v] : table.entries) {
    const auto& [a, b] = key;
    if (a.first < brackets.window_min || a.first > brackets.window_max) continue;
    if (b.first < brackets.window_min || b.first > brackets.window_max) continue;
    ext.central.emplace(key, v);
  }
  return ext;
}

PropertyReport check_extension_jacobi(const LaxAlgebra& lax, const GradedForm& gamma, const std::vector<Triple>& triples) {
  PropertyReport rep;
  for (const auto& [a, b, c] : triples) {
    ++rep.checked;
    const GradedCoordinates ab = bracket_of(lax, a, b);
    const GradedCoordinates bc = bracket_of(lax, b, c);
    const GradedCoordinates ca = bracket_of(lax, c, a);
    GradedCoordinates sum = bracket_of(lax, ab, c);
    accumulate(sum, bracket_of(lax, bc, a), Scalar(1));
    accumulate(sum, bracket_of(lax, ca, b), Scalar(1));
    const Scalar central = form_on(gamma, ab, c) + form_on(gamma, bc, a) + form_on(gamma, ca, b);
    if (!sum.empty() || !central.is_zero()) {
      rep.violations.push_back("Jacobi identity of the extension fails on " + show(a) + ", " + show(b) + ", " + show(c) +
                               ": " + show(sum) + " + (" + central.str() + ") t");
    }
  }
  return rep;
}

}  // namespace laxwb
