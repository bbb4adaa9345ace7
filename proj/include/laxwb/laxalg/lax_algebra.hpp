#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "laxwb/laxalg/algebra_type.hpp"
#include "laxwb/laxalg/constraints.hpp"
#include "laxwb/laxalg/matrix_function.hpp"

namespace laxwb {

/// X_m^r: the element of degree m whose leading coefficient at P+ is X^r.
struct GradedElement {
  int degree;
  int index;
  ScalarMatrix leading;
  MatrixFunction value;
  int p_minus_pole;  ///< pole order bound at P- used for this degree
  int relax;         ///< 1 if the bound was relaxed (non-generic degree)
};

struct DegreeInfo {
  int degree = 0;
  int relax = 0;
  int space_dimension = 0;  ///< dim of the degree-m space at the bound used
  int coset_dimension = 0;  ///< rank of the leading-coefficient map
  bool generic() const { return relax == 0; }
};

/// (degree, basis index) -> coefficient.
using GradedIndex = std::pair<int, int>;
using GradedCoordinates = std::map<GradedIndex, Scalar>;

struct StructureConstants {
  int window_min = 0;
  int window_max = -1;
  std::map<std::pair<GradedIndex, GradedIndex>, GradedCoordinates> table;
  int band_low = 0;   ///< min h - m - k over nonzero entries
  int band_high = 0;  ///< observed M: max h - m - k
};

/// The Lax operator algebra of a spec with cached graded basis and
/// expansions at P+. Thread safe.
class LaxAlgebra {
 public:
  explicit LaxAlgebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const;
  const std::vector<ScalarMatrix>& matrices() const;
  int dimension() const;

  /// Throws NonGenericDegree if one relaxation step at P- does not suffice.
  const std::vector<GradedElement>& graded_basis(int m) const;
  const GradedElement& element(int m, int r) const { return graded_basis(m)[static_cast<std::size_t>(r)]; }
  DegreeInfo degree_info(int m) const;

  /// Expansion of X_m^r at P+ known up to t^prec.
  SeriesMatrix expansion_at_plus(int m, int r, int prec) const;

  /// Precision at P+ that certifies a decomposition of an element with the
  /// given pole bounds at P- and (summed) at the weak points.
  int certificate_precision(int p_minus_pole, int weak_pole_sum) const;
  /// Leading-term peeling on the expansion at P+; the residual vanishes to a
  /// precision beyond which no nonzero function with these pole bounds can
  /// vanish, so the decomposition is exact.
  GradedCoordinates decompose_series(const SeriesMatrix& s, int p_minus_pole, int weak_pole_sum) const;
  /// Throws ZeroElement for 0 and DecompositionOverflow past the P- bound.
  GradedCoordinates decompose(const MatrixFunction& l) const;
  /// sum c X_h^u.
  MatrixFunction combine(const GradedCoordinates& c) const;

  /// Series coordinates of [X_m^r, X_k^s].
  GradedCoordinates bracket_coordinates(int m, int r, int k, int s) const;
  StructureConstants structure_constants(int lo, int hi) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace laxwb
