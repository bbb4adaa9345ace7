#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laxwb/connection/connection.hpp"
#include "laxwb/laxalg/lax_algebra.hpp"

namespace laxwb {

enum class CocycleKind { gamma1, gamma2 };

std::string cocycle_name(CocycleKind kind);
/// "gamma1" or "gamma2"; throws std::invalid_argument otherwise.
CocycleKind parse_cocycle(const std::string& name);

/// Residue at P+ of tr(L (dL' + [omega, L'])).
Scalar gamma1(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega, const AlgebraSpec& spec);
/// Residue at P+ of tr(L) d tr(L').
Scalar gamma2(const MatrixFunction& l, const MatrixFunction& lp, const AlgebraSpec& spec);

/// Residues of tr(L (dL' + [omega, L'])) at P+, P- and every weak point.
struct ResidueReport {
  Scalar at_plus;
  Scalar at_minus;
  std::vector<Scalar> at_weak;  ///< in the order of spec.tyurin
  Scalar total() const;
};

/// Residues at the weak points of the gamma1 integrand.
std::vector<Scalar> weak_point_residues(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega,
                                        const AlgebraSpec& spec);
ResidueReport gamma1_residues(const MatrixFunction& l, const MatrixFunction& lp, const ConnectionForm& omega,
                              const AlgebraSpec& spec);

/// Evaluates a cocycle from expansions at P+, with cached values on the
/// graded basis. Copies share their cache. Thread safe.
class CocycleEvaluator {
 public:
  /// gamma2 ignores omega, which may then be built from any valid spec.
  CocycleEvaluator(LaxAlgebra lax, CocycleKind kind, ConnectionForm omega);

  CocycleKind kind() const { return kind_; }
  const LaxAlgebra& algebra() const { return lax_; }
  const ConnectionForm& connection() const { return omega_; }

  /// Throws InsufficientPrecision if a or b is not known far enough.
  Scalar on_series(const SeriesMatrix& a, const SeriesMatrix& b) const;
  Scalar on_basis(const GradedIndex& a, const GradedIndex& b) const;
  Scalar on_coordinates(const GradedCoordinates& a, const GradedCoordinates& b) const;
  /// gamma([X_a, X_b], X_c) from expansions of the bracket, independent of
  /// any decomposition.
  Scalar on_bracket(const GradedIndex& a, const GradedIndex& b, const GradedIndex& c) const;

  /// omega as a matrix of coefficients of dt at P+.
  SeriesMatrix connection_series(int prec) const;

 private:
  struct Cache;
  LaxAlgebra lax_;
  CocycleKind kind_;
  ConnectionForm omega_;
  std::shared_ptr<Cache> cache_;
};

/// Values on pairs of graded basis elements over a window of degrees.
struct CocycleTable {
  CocycleKind kind = CocycleKind::gamma1;
  int window_min = 0;
  int window_max = -1;
  std::map<std::pair<GradedIndex, GradedIndex>, Scalar> entries;  ///< nonzero values only
  bool empty_band = true;  ///< no nonzero value
  int band_low = 0;        ///< M1: lowest level m + k with a nonzero value
  int band_high = 0;       ///< M2: highest such level

  Scalar at(const GradedIndex& a, const GradedIndex& b) const;
  bool in_window(const GradedIndex& a) const { return a.first >= window_min && a.first <= window_max; }
};

CocycleTable cocycle_table(const CocycleEvaluator& gamma, int lo, int hi);

/// Bilinear form on graded basis elements.
using GradedForm = std::function<Scalar(const GradedIndex&, const GradedIndex&)>;

GradedForm form_of(const CocycleEvaluator& gamma);
/// Table values inside the window, the evaluator outside it.
GradedForm form_of(const CocycleTable& table, const CocycleEvaluator& fallback);

struct Triple {
  GradedIndex a, b, c;
};
using Pair = std::pair<GradedIndex, GradedIndex>;

std::vector<Triple> sample_triples(int dimension, int lo, int hi, int count, unsigned seed);
/// Pairs of graded basis elements with degrees in [lo, hi] and level in [level_lo, level_hi].
std::vector<Pair> level_pairs(int dimension, int lo, int hi, int level_lo, int level_hi);

struct PropertyReport {
  int checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void merge(const PropertyReport& o);
};

/// dim of every degree space in [lo, hi] equals dim g and every basis
/// element passes the membership oracle.
PropertyReport check_graded_basis(const LaxAlgebra& lax, int lo, int hi);
/// For all pairs in [lo, hi]: the pointwise bracket passes the membership
/// oracle and equals the combination given by its structure constants.
PropertyReport check_closure(const LaxAlgebra& lax, int lo, int hi);
/// gl(n) only: every basis element splits into (tr/n) I and a traceless
/// part, members of the s(n) and sl(n) algebras of the same data.
PropertyReport check_splitting(const LaxAlgebra& lax, int lo, int hi);
/// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 in graded coordinates.
PropertyReport check_jacobi(const LaxAlgebra& lax, const std::vector<Triple>& triples);

/// gamma(X_a, X_b) + gamma(X_b, X_a) = 0 and gamma(X_a, X_a) = 0 on the table.
PropertyReport check_antisymmetry(const CocycleTable& table);
/// gamma([a,b],c) + gamma([b,c],a) + gamma([c,a],b) = 0 computed from
/// expansions of the brackets.
PropertyReport check_cocycle_condition(const CocycleEvaluator& gamma, const std::vector<Triple>& triples);
/// The same identity through structure constants and an arbitrary form.
PropertyReport check_cocycle_condition(const LaxAlgebra& lax, const GradedForm& gamma, const std::vector<Triple>& triples);

/// Graded coordinates of nabla_{e_k} X_m^r, cached per (k, m, r).
class ModuleAction {
 public:
  ModuleAction(LaxAlgebra lax, ConnectionForm omega);

  const LaxAlgebra& algebra() const;
  const ConnectionForm& connection() const;
  const GradedVectorField& vector_field(int k) const;
  GradedCoordinates apply(int k, const GradedIndex& x) const;
  /// Expansion of nabla_{e_k} X at P+.
  SeriesMatrix apply_series(int k, const GradedIndex& x, int prec) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// nabla_{e_k} X_n^r = n X_{n+k}^r + (higher degrees) for all listed k and x.
PropertyReport check_module_grading(const ModuleAction& action, const std::vector<int>& ks,
                                    const std::vector<GradedIndex>& elements);
/// nabla_e [a, b] = [nabla_e a, b] + [a, nabla_e b] in graded coordinates.
PropertyReport check_derivation(const ModuleAction& action, const std::vector<int>& ks, const std::vector<Triple>& triples);
/// gamma(nabla_e a, b) + gamma(a, nabla_e b) = 0.
PropertyReport check_l_invariance(const GradedForm& gamma, const ModuleAction& action, const std::vector<int>& ks,
                                  const std::vector<Pair>& pairs);

struct RecursionReport {
  PropertyReport above_band;   ///< (i)  (m + k) gamma = 0 from the top level up
  PropertyReport level_zero;   ///< (ii) gamma(X_n, X_-n) = n gamma(X_1, X_-1)
  PropertyReport symmetry;     ///< (iii) gamma(X_1^r, X_-1^s) = gamma(X_1^s, X_-1^r)
  PropertyReport zero_degree;  ///< (iv) gamma(X_m, X_0) = 0 for m >= 0
  bool ok() const { return above_band.ok() && level_zero.ok() && symmetry.ok() && zero_degree.ok(); }
};

RecursionReport recursion_identities(const CocycleTable& table, int dimension);

/// psi(X, Y) = gamma(X_1, Y_-1) in matrix_basis coordinates.
struct BilinearFormOnG {
  ScalarMatrix values;
  bool symmetric = false;
  bool invariant = false;
  /// c with psi = c tr(XY), if such c exists.
  std::optional<Scalar> trace_multiple;
};

/// Throws PositiveLevelNonzero if the table has a nonzero value at a
/// positive level.
BilinearFormOnG extract_psi(const CocycleTable& table, const AlgebraType& algebra);

/// A pair on which exactly one of two nonzero tables vanishes; this makes
/// the tables linearly independent.
struct IndependenceWitness {
  Pair pair;
  Scalar first;
  Scalar second;
};

std::optional<IndependenceWitness> independence_witness(const CocycleTable& first, const CocycleTable& second);

/// Structure constants of g^ = g + C t with deg t = 0; the central column
/// holds gamma on each pair.
struct CentralExtensionTable {
  StructureConstants brackets;
  std::map<std::pair<GradedIndex, GradedIndex>, Scalar> central;
};

CentralExtensionTable central_extension(const StructureConstants& brackets, const CocycleTable& table);

/// Jacobi identity of the extension on triples, with brackets and gamma
/// evaluated on demand outside the stored window.
PropertyReport check_extension_jacobi(const LaxAlgebra& lax, const GradedForm& gamma, const std::vector<Triple>& triples);

}  // namespace laxwb
