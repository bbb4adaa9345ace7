#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "laxwb/cocycle/cocycle.hpp"
#include "laxwb/errors.hpp"

using namespace laxwb;
using namespace laxwb::testing;

namespace {

FieldElement z_power(const Curve& c, int n) {
  const RationalFunction z(Polynomial::x());
  RationalFunction r(Scalar(1));
  for (int k = 0; k < std::abs(n); ++k) r = n > 0 ? r * z : r / z;
  return FieldElement(c, r);
}

struct Workspace {
  AlgebraSpec spec;
  LaxAlgebra lax;
  ConnectionForm omega;
  explicit Workspace(AlgebraSpec s) : spec(s), lax(s), omega(build_connection_form(s)) {}
  CocycleEvaluator gamma(CocycleKind k) const { return CocycleEvaluator(lax, k, omega); }
};

const Workspace& genus0_gl() {
  static const Workspace s(classical("gl", 2));
  return s;
}

const Workspace& genus1(const std::string& kind) {
  static std::map<std::string, std::unique_ptr<Workspace>> cache;
  auto& slot = cache[kind];
  if (!slot) slot = std::make_unique<Workspace>(elliptic(kind));
  return *slot;
}

CocycleTable zero_table(int lo, int hi) {
  CocycleTable t;
  t.window_min = lo;
  t.window_max = hi;
  return t;
}

}  // namespace

TEST(Gamma1, ClassicalAffineCocycle) {
  const Workspace& s = genus0_gl();
  const auto mats = matrix_basis(s.spec.algebra);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m)
      for (int r = 0; r < 4; ++r)
        for (int q = 0; q < 4; ++q) {
          const auto a = MatrixFunction::from_constant(s.spec.curve, mats[r], z_power(s.spec.curve, n));
          const auto b = MatrixFunction::from_constant(s.spec.curve, mats[q], z_power(s.spec.curve, m));
          const Scalar want = n + m == 0 ? Scalar(m) * (mats[r] * mats[q]).trace() : Scalar();
          EXPECT_EQ(gamma1(a, b, s.omega, s.spec), want) << n << " " << m << " " << r << " " << q;
        }
}

TEST(Gamma1, SelfPairingVanishes) {
  const Workspace& s = genus1("gl");
  const MatrixFunction& l = s.lax.element(-2, 1).value;
  EXPECT_EQ(gamma1(l, l, s.omega, s.spec), Scalar());
  EXPECT_EQ(gamma2(l, l, s.spec), Scalar());
}

TEST(Gamma2, ScalarCurrentsInGenusZero) {
  const AlgebraSpec spec = classical("gl", 1);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      const auto a = MatrixFunction::from_constant(spec.curve, ScalarMatrix::identity(1), z_power(spec.curve, n));
      const auto b = MatrixFunction::from_constant(spec.curve, ScalarMatrix::identity(1), z_power(spec.curve, m));
      EXPECT_EQ(gamma2(a, b, spec), n + m == 0 ? Scalar(m) : Scalar()) << n << " " << m;
    }
}

TEST(Gamma2, VanishesOnTracelessAlgebras) {
  for (const std::string kind : {"sl", "so", "sp"}) {
    const Workspace& s = genus1(kind);
    const CocycleTable t = cocycle_table(s.gamma(CocycleKind::gamma2), -2, 2);
    EXPECT_TRUE(t.entries.empty()) << kind;
    EXPECT_TRUE(t.empty_band);
  }
}

TEST(CocycleTable, EmptyWindow) {
  const CocycleTable t = cocycle_table(genus1("gl").gamma(CocycleKind::gamma1), 1, 0);
  EXPECT_TRUE(t.entries.empty());
  EXPECT_TRUE(t.empty_band);
}

TEST(CocycleTable, ClassicalBand) {
  const CocycleTable t = cocycle_table(genus0_gl().gamma(CocycleKind::gamma1), -4, 4);
  ASSERT_FALSE(t.empty_band);
  EXPECT_EQ(t.band_low, 0);
  EXPECT_EQ(t.band_high, 0);
}

TEST(CocycleTable, PositiveLevelsVanishInGenusOne) {
  const CocycleTable t = cocycle_table(genus1("gl").gamma(CocycleKind::gamma1), -4, 4);
  ASSERT_FALSE(t.empty_band);
  EXPECT_LE(t.band_high, 0);
  EXPECT_TRUE(check_antisymmetry(t).ok());
}

TEST(Residues, WeakPointsAndResidueTheorem) {
  const Workspace& s = genus1("gl");
  for (auto [m, k] : {std::pair{2, -3}, {-1, 0}, {1, -1}}) {
    const MatrixFunction& a = s.lax.element(m, 0).value;
    const MatrixFunction& b = s.lax.element(k, 3).value;
    for (const Scalar& r : weak_point_residues(a, b, s.omega, s.spec)) EXPECT_EQ(r, Scalar());
    const ResidueReport rep = gamma1_residues(a, b, s.omega, s.spec);
    EXPECT_EQ(rep.total(), Scalar());
    EXPECT_EQ(rep.at_plus, gamma1(a, b, s.omega, s.spec));
  }
}

TEST(Residues, NoWeakPointsInClassicalCase) {
  const Workspace& s = genus0_gl();
  EXPECT_TRUE(weak_point_residues(s.lax.element(1, 0).value, s.lax.element(-1, 0).value, s.omega, s.spec).empty());
}

TEST(CocycleCondition, BothCocyclesInGenusOne) {
  const Workspace& s = genus1("gl");
  const auto triples = sample_triples(4, -3, 3, 20, 17);
  for (CocycleKind k : {CocycleKind::gamma1, CocycleKind::gamma2}) {
    const CocycleEvaluator g = s.gamma(k);
    EXPECT_TRUE(check_cocycle_condition(g, triples).ok()) << cocycle_name(k);
    EXPECT_TRUE(check_cocycle_condition(s.lax, form_of(g), triples).ok()) << cocycle_name(k);
  }
}

TEST(CocycleCondition, CoboundaryPasses) {
  const Workspace& s = genus1("gl");
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  std::map<GradedIndex, Scalar> phi;
  for (int m = -6; m <= 8; ++m)
    for (int r = 0; r < 4; ++r) phi[{m, r}] = Scalar(d(rng));
  const GradedForm coboundary = [&](const GradedIndex& a, const GradedIndex& b) {
    Scalar v;
    for (const auto& [idx, c] : s.lax.bracket_coordinates(a.first, a.second, b.first, b.second)) v += c * phi.at(idx);
    return v;
  };
  EXPECT_TRUE(check_cocycle_condition(s.lax, coboundary, sample_triples(4, -2, 2, 20, 9)).ok());
}

TEST(LInvariance, HoldsAndDetectsPerturbation) {
  const Workspace& s = genus1("gl");
  const ModuleAction action(s.lax, s.omega);
  const CocycleEvaluator g = s.gamma(CocycleKind::gamma1);
  CocycleTable t = cocycle_table(g, -3, 3);
  const auto pairs = level_pairs(4, -3, 3, -1, 1);
  EXPECT_TRUE(check_l_invariance(form_of(t, g), action, {-1, 0, 1}, pairs).ok());
  t.entries[{{-1, 0}, {1, 0}}] += Scalar(1);
  EXPECT_FALSE(check_l_invariance(form_of(t, g), action, {-1, 0, 1}, pairs).ok());
}

TEST(Recursion, ExactInGenusOne) {
  const CocycleTable t = cocycle_table(genus1("gl").gamma(CocycleKind::gamma1), -4, 4);
  const RecursionReport rep = recursion_identities(t, 4);
  EXPECT_TRUE(rep.level_zero.ok());
  EXPECT_TRUE(rep.symmetry.ok());
  EXPECT_TRUE(rep.ok());
}

TEST(Recursion, ZeroTable) { EXPECT_TRUE(recursion_identities(zero_table(-3, 3), 4).ok()); }

TEST(Psi, ClassicalIsMinusTrace) {
  const CocycleTable t = cocycle_table(genus0_gl().gamma(CocycleKind::gamma1), -2, 2);
  const BilinearFormOnG psi = extract_psi(t, AlgebraType::parse("gl", 2));
  const auto mats = matrix_basis(AlgebraType::parse("gl", 2));
  for (int r = 0; r < 4; ++r)
    for (int q = 0; q < 4; ++q) EXPECT_EQ(psi.values(r, q), -(mats[r] * mats[q]).trace());
  ASSERT_TRUE(psi.trace_multiple);
  EXPECT_EQ(*psi.trace_multiple, Scalar(-1));
}

TEST(Psi, Sl2IsTraceMultiple) {
  const CocycleTable t = cocycle_table(genus1("sl").gamma(CocycleKind::gamma1), -1, 1);
  const BilinearFormOnG psi = extract_psi(t, AlgebraType::parse("sl", 2));
  EXPECT_TRUE(psi.symmetric);
  EXPECT_TRUE(psi.invariant);
  ASSERT_TRUE(psi.trace_multiple);
  EXPECT_FALSE(psi.trace_multiple->is_zero());
}

TEST(Psi, ZeroCocycle) {
  const BilinearFormOnG psi = extract_psi(zero_table(-1, 1), AlgebraType::parse("gl", 2));
  EXPECT_TRUE(psi.values.is_zero());
  EXPECT_TRUE(psi.symmetric);
  EXPECT_TRUE(psi.invariant);
}

TEST(Psi, RejectsPositiveLevels) {
  CocycleTable t = zero_table(-1, 1);
  t.entries[{{1, 0}, {0, 0}}] = Scalar(1);
  EXPECT_THROW(extract_psi(t, AlgebraType::parse("gl", 2)), PositiveLevelNonzero);
}

TEST(CentralExtension, ClassicalAffineAlgebra) {
  const Workspace s(classical("sl", 2));
  const StructureConstants sc = s.lax.structure_constants(-2, 2);
  const CocycleTable t = cocycle_table(s.gamma(CocycleKind::gamma1), -2, 2);
  const CentralExtensionTable ext = central_extension(sc, t);
  const auto mats = matrix_basis(s.spec.algebra);
  for (int n = -2; n <= 2; ++n)
    for (int m = -2; m <= 2; ++m)
      for (int r = 0; r < 3; ++r)
        for (int q = 0; q < 3; ++q) {
          const auto it = ext.central.find({{n, r}, {m, q}});
          const Scalar got = it == ext.central.end() ? Scalar() : it->second;
          EXPECT_EQ(got, n + m == 0 ? Scalar(m) * (mats[r] * mats[q]).trace() : Scalar());
        }
  EXPECT_TRUE(check_extension_jacobi(s.lax, form_of(t, s.gamma(CocycleKind::gamma1)), sample_triples(3, -2, 2, 20, 4)).ok());
}

TEST(CentralExtension, ZeroCocycleSplits) {
  const Workspace& s = genus0_gl();
  EXPECT_TRUE(central_extension(s.lax.structure_constants(-1, 1), zero_table(-1, 1)).central.empty());
}

TEST(Independence, Gl2Tables) {
  const Workspace& s = genus1("gl");
  const CocycleTable t1 = cocycle_table(s.gamma(CocycleKind::gamma1), -2, 2);
  const CocycleTable t2 = cocycle_table(s.gamma(CocycleKind::gamma2), -2, 2);
  const auto w = independence_witness(t1, t2);
  ASSERT_TRUE(w);
  EXPECT_NE(w->first.is_zero(), w->second.is_zero());
  EXPECT_EQ(t1.at(w->pair.first, w->pair.second), w->first);
  EXPECT_EQ(t2.at(w->pair.first, w->pair.second), w->second);
}

TEST(AlgebraProperties, Gl2SplitsIntoScalarAndTraceless) {
  const Workspace& s = genus1("gl");
  const PropertyReport rep = check_splitting(s.lax, -2, 2);
  EXPECT_EQ(rep.checked, 20);
  EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.violations.front());
}

TEST(AlgebraProperties, JacobiAndClosureOnSmallWindow) {
  const Workspace& s = genus1("gl");
  EXPECT_TRUE(check_graded_basis(s.lax, -1, 1).ok());
  EXPECT_TRUE(check_closure(s.lax, -1, 1).ok());
  EXPECT_TRUE(check_jacobi(s.lax, sample_triples(4, -2, 2, 20, 5)).ok());
}

TEST(Sampling, SeedDeterministic) {
  const auto a = sample_triples(4, -4, 4, 20, 42), b = sample_triples(4, -4, 4, 20, 42);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].a, b[i].a);
    EXPECT_EQ(a[i].c, b[i].c);
  }
}

// Two feasible connection forms differ by theta = X eta0 with X in the Lax
// algebra; gamma1 then changes by the coboundary -res tr(theta [L, L']).
TEST(Gamma1, ConnectionChoiceChangesOnlyByCoboundary) {
  const Workspace& s = genus1("gl");
  const GradedElement& x = s.lax.element(1, 0);
  ConnectionForm other = s.omega;
  other.F = other.F + x.value;
  other.p_minus_pole = std::max(other.p_minus_pole, x.p_minus_pole);
  const ConnectionReport rep = verify_connection_form(other, s.spec);
  ASSERT_TRUE(rep.ok()) << rep.violations.front();
  ASSERT_FALSE(other.F == s.omega.F);

  const CocycleTable a = cocycle_table(s.gamma(CocycleKind::gamma1), -3, 3);
  const CocycleTable b = cocycle_table(CocycleEvaluator(s.lax, CocycleKind::gamma1, other), -3, 3);
  int differing = 0;
  for (int m = -3; m <= 3; ++m)
    for (int k = -3; k <= 3; ++k)
      for (int r = 0; r < 4; ++r)
        for (int q = 0; q < 4; ++q) {
          const MatrixFunction& l = s.lax.element(m, r).value;
          const MatrixFunction& lp = s.lax.element(k, q).value;
          const SeriesMatrix form = expand_differential_at(x.value * bracket(l, lp), s.spec.p_plus, 0);
          const Scalar coboundary = -series_trace(form).coeff(-1);
          const Scalar diff = b.at({m, r}, {k, q}) - a.at({m, r}, {k, q});
          EXPECT_EQ(diff, coboundary) << m << " " << r << " " << k << " " << q;
          if (m + k >= 0) {
            EXPECT_EQ(diff, Scalar()) << "level " << m + k;
          }
          if (!diff.is_zero()) ++differing;
        }
  EXPECT_GT(differing, 0);
  EXPECT_EQ(extract_psi(a, s.spec.algebra).values, extract_psi(b, s.spec.algebra).values);
}
