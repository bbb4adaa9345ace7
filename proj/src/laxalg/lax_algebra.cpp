#include "laxwb/laxalg/lax_algebra.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <stdexcept>

#include "laxwb/curve/expansion.hpp"
#include "laxwb/errors.hpp"

namespace laxwb {

struct LaxAlgebra::State {
  explicit State(AlgebraSpec s) : spec(std::move(s)) {}
  AlgebraSpec spec;
  std::vector<ScalarMatrix> matrices;
  int weak_allowance = 0;
  std::recursive_mutex mutex;
  std::map<int, std::vector<GradedElement>> degrees;
  std::map<int, DegreeInfo> infos;
  std::map<GradedIndex, SeriesMatrix> series;
};

LaxAlgebra::LaxAlgebra(AlgebraSpec spec) : state_(std::make_shared<State>(std::move(spec))) {
  state_->spec.validate();
  state_->matrices = matrix_basis(state_->spec.algebra);
  for (const auto& w : state_->spec.tyurin) state_->weak_allowance += state_->spec.weak_pole_order(w);
}

const AlgebraSpec& LaxAlgebra::spec() const { return state_->spec; }
const std::vector<ScalarMatrix>& LaxAlgebra::matrices() const { return state_->matrices; }
int LaxAlgebra::dimension() const { return static_cast<int>(state_->matrices.size()); }

namespace {

std::vector<GradedElement> try_degree(const AlgebraSpec& spec, const std::vector<ScalarMatrix>& mats, int m,
                                      int relax, DegreeInfo& info) {
  const ConstraintSystem sys = assemble_constraints(spec, m, relax);
  const std::size_t d = sys.functions.size();
  const int dim = static_cast<int>(mats.size());
  std::vector<ScalarVector> kernel;
  if (sys.equations.rows() == 0) {
    for (int j = 0; j < sys.unknowns(); ++j) {
      ScalarVector v(static_cast<std::size_t>(sys.unknowns()));
      v[static_cast<std::size_t>(j)] = Scalar(1);
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = nullspace(sys.equations);
  }
  info.degree = m;
  info.relax = relax;
  info.space_dimension = static_cast<int>(kernel.size());

  // Coefficient of t^m at P+ of each space function.
  std::vector<Scalar> lead(d);
  for (std::size_t k = 0; k < d; ++k) lead[k] = expansion_coefficients(sys.functions[k], spec.p_plus, m, m + 1)[0];

  // After a relaxation the representatives are fixed only up to the next
  // degree. The extra pole coefficient at P- is then reduced modulo the
  // center, which keeps brackets with them inside the band.
  const int size = spec.algebra.size();
  const int tail = relax > 0 ? size * size : 0;
  std::vector<Scalar> minus_lead(relax > 0 ? d : 0);
  const int pole = m + spec.curve.genus() + relax;
  for (std::size_t k = 0; k < minus_lead.size(); ++k)
    minus_lead[k] = expansion_coefficients(sys.functions[k], spec.p_minus, -pole, -pole + 1)[0];

  // Vectors (leading coordinates | traceless part at P- | unknowns), reduced in that order.
  std::vector<ScalarVector> rows;
  for (const auto& c : kernel) {
    ScalarVector w(static_cast<std::size_t>(dim + tail) + c.size());
    ScalarMatrix at_minus(size, size);
    for (int r = 0; r < dim; ++r) {
      Scalar acc;
      for (std::size_t k = 0; k < d; ++k) acc += c[static_cast<std::size_t>(r) * d + k] * lead[k];
      w[static_cast<std::size_t>(r)] = acc;
      if (tail == 0) continue;
      Scalar pm;
      for (std::size_t k = 0; k < d; ++k) pm += c[static_cast<std::size_t>(r) * d + k] * minus_lead[k];
      if (!pm.is_zero()) at_minus = at_minus + mats[static_cast<std::size_t>(r)] * pm;
    }
    if (tail > 0) {
      Scalar tr;
      for (int i = 0; i < size; ++i) tr += at_minus(i, i);
      tr = tr / Scalar(size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
          w[static_cast<std::size_t>(dim + i * size + j)] = i == j ? at_minus(i, j) - tr : at_minus(i, j);
    }
    std::copy(c.begin(), c.end(), w.begin() + dim + tail);
    rows.push_back(std::move(w));
  }
  std::vector<int> order(rows.empty() ? 0 : rows.front().size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  const auto reduced = echelon_basis(rows, order);

  std::vector<GradedElement> out;
  for (const auto& w : reduced) {
    int pivot = -1;
    for (int r = 0; r < dim; ++r)
      if (!w[static_cast<std::size_t>(r)].is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    ScalarVector coords(w.begin() + dim + tail, w.end());
    out.push_back({m, pivot, mats[static_cast<std::size_t>(pivot)], sys.assemble(coords),
                   m + spec.curve.genus() + relax, relax});
  }
  info.coset_dimension = static_cast<int>(out.size());
  std::sort(out.begin(), out.end(), [](const GradedElement& a, const GradedElement& b) { return a.index < b.index; });
  return out;
}

}  // namespace

const std::vector<GradedElement>& LaxAlgebra::graded_basis(int m) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mutex);
  auto it = state_->degrees.find(m);
  if (it != state_->degrees.end()) return it->second;
  DegreeInfo info;
  for (int relax = 0; relax <= 1; ++relax) {
    auto elems = try_degree(state_->spec, state_->matrices, m, relax, info);
    if (static_cast<int>(elems.size()) == dimension()) {
      state_->infos[m] = info;
      return state_->degrees.emplace(m, std::move(elems)).first->second;
    }
  }
  throw NonGenericDegree("degree " + std::to_string(m) + ": leading coefficients span only " +
                         std::to_string(info.coset_dimension) + " of " + std::to_string(dimension()) +
                         " dimensions after relaxing the bound at P-");
}

DegreeInfo LaxAlgebra::degree_info(int m) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mutex);
  graded_basis(m);
  return state_->infos.at(m);
}

SeriesMatrix LaxAlgebra::expansion_at_plus(int m, int r, int prec) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mutex);
  auto it = state_->series.find({m, r});
  if (it != state_->series.end() && it->second.precision() >= prec) return it->second.truncated(prec);
  const int target = std::max(prec, it == state_->series.end() ? prec : it->second.precision() + 4);
  SeriesMatrix s = expand_at(element(m, r).value, state_->spec.p_plus, target);
  state_->series[{m, r}] = s;
  return s.truncated(prec);
}

int LaxAlgebra::certificate_precision(int p_minus_pole, int weak_pole_sum) const {
  const int g = state_->spec.curve.genus();
  const int h_max = p_minus_pole - g + 2;
  const int pole = std::max(p_minus_pole, h_max + g + 1);
  return pole + weak_pole_sum + state_->weak_allowance + 1;
}

GradedCoordinates LaxAlgebra::decompose_series(const SeriesMatrix& s, int p_minus_pole, int weak_pole_sum) const {
  const int g = state_->spec.curve.genus();
  const int h_max = p_minus_pole - g + 2;
  const int prec = certificate_precision(p_minus_pole, weak_pole_sum);
  if (s.precision() < prec) {
    throw InsufficientPrecision("decomposition needs the expansion at P+ to O(t^" + std::to_string(prec) + ")");
  }
  SeriesMatrix residual = s.truncated(prec);
  GradedCoordinates out;
  for (int h = residual.valuation(); h < prec; ++h) {
    const ScalarMatrix c = residual.coefficient(h);
    if (c.is_zero()) continue;
    if (h > h_max) {
      throw DecompositionOverflow("nonzero degree-" + std::to_string(h) + " term beyond the bound " +
                                  std::to_string(h_max) + " implied by the pole order at P-");
    }
    ScalarVector coords;
    try {
      coords = basis_coordinates(state_->spec.algebra, c);
    } catch (const std::invalid_argument&) {
      throw NotMember("leading coefficient of degree " + std::to_string(h) + " lies outside " + state_->spec.algebra.name());
    }
    for (std::size_t r = 0; r < coords.size(); ++r) {
      if (coords[r].is_zero()) continue;
      out[{h, static_cast<int>(r)}] = coords[r];
      residual = residual - expansion_at_plus(h, static_cast<int>(r), prec) * coords[r];
    }
  }
  return out;
}

GradedCoordinates LaxAlgebra::decompose(const MatrixFunction& l) const {
  if (l.is_zero()) throw ZeroElement("decomposition of the zero element");
  const AlgebraSpec& spec = state_->spec;
  int p_minus_pole = INT_MIN;
  int weak = 0;
  for (const auto& f : l.entries()) {
    if (f.is_zero()) continue;
    p_minus_pole = std::max(p_minus_pole, -order_at(f, spec.p_minus));
  }
  for (const auto& w : spec.tyurin) weak += std::max(0, -order_at(l, w.gamma));
  const SeriesMatrix s = expand_at(l, spec.p_plus, certificate_precision(p_minus_pole, weak));
  return decompose_series(s, p_minus_pole, weak);
}

MatrixFunction LaxAlgebra::combine(const GradedCoordinates& c) const {
  MatrixFunction out(state_->spec.curve, state_->spec.algebra.size());
  for (const auto& [idx, coef] : c) out += element(idx.first, idx.second).value * coef;
  return out;
}

GradedCoordinates LaxAlgebra::bracket_coordinates(int m, int r, int k, int s) const {
  const GradedElement& a = element(m, r);
  const GradedElement& b = element(k, s);
  const int pole = a.p_minus_pole + b.p_minus_pole;
  const int prec = certificate_precision(pole, state_->weak_allowance);
  const SeriesMatrix sa = expansion_at_plus(m, r, prec - k);
  const SeriesMatrix sb = expansion_at_plus(k, s, prec - m);
  return decompose_series(series_bracket(sa, sb), pole, state_->weak_allowance);
}

StructureConstants LaxAlgebra::structure_constants(int lo, int hi) const {
  StructureConstants sc;
  sc.window_min = lo;
  sc.window_max = hi;
  bool any = false;
  const int dim = dimension();
  for (int m = lo; m <= hi; ++m) {
    for (int k = lo; k <= hi; ++k) {
      for (int r = 0; r < dim; ++r) {
        for (int s = 0; s < dim; ++s) {
          GradedCoordinates c = bracket_coordinates(m, r, k, s);
          for (const auto& [idx, coef] : c) {
            const int off = idx.first - m - k;
            if (!any) {
              sc.band_low = sc.band_high = off;
              any = true;
            }
            sc.band_low = std::min(sc.band_low, off);
            sc.band_high = std::max(sc.band_high, off);
          }
          sc.table.emplace(std::make_pair(GradedIndex{m, r}, GradedIndex{k, s}), std::move(c));
        }
      }
    }
  }
  return sc;
}

}  // namespace laxwb
