#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "laxwb/errors.hpp"
#include "laxwb/laxalg/constraints.hpp"
#include "laxwb/laxalg/lax_algebra.hpp"
#include "laxwb/laxalg/membership.hpp"

using namespace laxwb;
using namespace laxwb::testing;

namespace {

FieldElement z_power(const Curve& c, int n) {
  const RationalFunction z(Polynomial::x());
  RationalFunction r(Scalar(1));
  for (int k = 0; k < std::abs(n); ++k) r = n > 0 ? r * z : r / z;
  return FieldElement(c, r);
}

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; }

}  // namespace

TEST(MatrixBasis, Dimensions) {
  EXPECT_EQ(matrix_basis(AlgebraType::parse("gl", 2)).size(), 4u);
  EXPECT_EQ(matrix_basis(AlgebraType::parse("sl", 2)).size(), 3u);
  EXPECT_EQ(matrix_basis(AlgebraType::parse("sp", 1)).size(), 3u);
  EXPECT_EQ(matrix_basis(AlgebraType::parse("so", 3)).size(), 3u);
  EXPECT_EQ(matrix_basis(AlgebraType::parse("sp", 2)).size(), 10u);
}

TEST(AlgebraSpec, RejectsWrongWeakPointCount) {
  AlgebraSpec spec = elliptic("gl");
  spec.tyurin.pop_back();
  EXPECT_THROW(spec.validate(), InvalidTyurin);
}

TEST(AlgebraSpec, RejectsNonIsotropicSoVector) {
  AlgebraSpec spec = elliptic("so");
  spec.tyurin[0].alpha = {Scalar(1), Scalar(1), Scalar(0)};
  EXPECT_THROW(spec.validate(), InvalidTyurin);
}

TEST(Constraints, GlConditionCountPerWeakPoint) {
  // n(n-1) column conditions, one trace condition and n-1 eigenvector ones.
  for (int n : {2, 3}) {
    ScalarVector alpha(static_cast<std::size_t>(n), Scalar(0));
    alpha[0] = Scalar(1);
    alpha[static_cast<std::size_t>(n - 1)] = Scalar(3);
    EXPECT_EQ(lax_conditions(AlgebraType::parse("gl", n), alpha).size(), static_cast<std::size_t>(n * n)) << n;
  }
}

TEST(Constraints, ZeroAlphaForbidsThePole) {
  AlgebraSpec spec = elliptic("gl");
  spec.tyurin[1].alpha = {Scalar(0), Scalar(0)};
  EXPECT_EQ(degree_divisor(spec, 0, 0)[spec.tyurin[1].gamma], 0);
  EXPECT_EQ(degree_divisor(spec, 0, 0)[spec.tyurin[0].gamma], 1);
}

TEST(GradedBasis, ClassicalLoopAlgebra) {
  const AlgebraSpec spec = classical("gl", 2);
  const LaxAlgebra lax(spec);
  const auto mats = matrix_basis(spec.algebra);
  for (int m = -3; m <= 3; ++m) {
    ASSERT_EQ(lax.graded_basis(m).size(), 4u);
    for (int r = 0; r < 4; ++r)
      EXPECT_EQ(lax.element(m, r).value, MatrixFunction::from_constant(spec.curve, mats[r], z_power(spec.curve, m)))
          << m << " " << r;
  }
}

TEST(GradedBasis, ScalarAlgebraIsFunctionAlgebra) {
  const AlgebraSpec spec = elliptic("s");
  const LaxAlgebra lax(spec);
  for (int m = -2; m <= 2; ++m) {
    ASSERT_EQ(lax.graded_basis(m).size(), 1u);
    const MatrixFunction& v = lax.element(m, 0).value;
    EXPECT_TRUE(v(0, 1).is_zero());
    EXPECT_TRUE(v(1, 0).is_zero());
    EXPECT_EQ(v(0, 0), v(1, 1));
    // No pole at the weak points.
    for (const auto& w : spec.tyurin) EXPECT_GE(order_at(v, w.gamma), 0);
  }
}

TEST(GradedBasis, EllipticGl2FullDimensionAndMembership) {
  const AlgebraSpec spec = elliptic("gl");
  const LaxAlgebra lax(spec);
  for (int m = -4; m <= 4; ++m) {
    ASSERT_EQ(lax.graded_basis(m).size(), 4u) << m;
    for (const auto& e : lax.graded_basis(m)) {
      EXPECT_NO_THROW(verify_membership(e.value, spec)) << m << " " << e.index;
      EXPECT_EQ(order_at(e.value, spec.p_plus), m);
    }
  }
}

TEST(Bracket, SelfBracketVanishes) {
  const LaxAlgebra lax(elliptic("gl"));
  const MatrixFunction& l = lax.element(2, 1).value;
  EXPECT_TRUE(bracket(l, l).is_zero());
}

TEST(Bracket, ClassicalCurrentBracket) {
  const AlgebraSpec spec = classical("gl", 2);
  const auto mats = matrix_basis(spec.algebra);
  for (int n : {-2, 1}) {
    for (int m : {-1, 3}) {
      const auto a = MatrixFunction::from_constant(spec.curve, mats[1], z_power(spec.curve, n));
      const auto b = MatrixFunction::from_constant(spec.curve, mats[2], z_power(spec.curve, m));
      EXPECT_EQ(bracket(a, b), MatrixFunction::from_constant(spec.curve, commutator(mats[1], mats[2]),
                                                             z_power(spec.curve, n + m)));
    }
  }
}

TEST(Bracket, EllipticBracketIsMember) {
  const AlgebraSpec spec = elliptic("gl");
  const LaxAlgebra lax(spec);
  EXPECT_NO_THROW(verify_membership(bracket(lax.element(1, 0).value, lax.element(-2, 2).value), spec));
  EXPECT_NO_THROW(verify_membership(bracket(lax.element(-1, 1).value, lax.element(-1, 3).value), spec));
}

TEST(Membership, DoublePoleAtWeakPointRejected) {
  const AlgebraSpec spec = elliptic("gl");
  const Curve& c = spec.curve;
  const FieldElement x = FieldElement::coordinate(c);
  const FieldElement f = (x + FieldElement::constant(c, Scalar(1))).inverse();
  ScalarMatrix e11(2, 2);
  e11(0, 0) = Scalar(1);
  EXPECT_THROW(verify_membership(MatrixFunction::from_constant(c, e11, f * f), spec), NotMember);
}

TEST(Decompose, BasisElementIsItsOwnCoordinate) {
  const LaxAlgebra lax(elliptic("gl"));
  for (int m : {-3, -1, 0, 2}) {
    const GradedCoordinates c = lax.decompose(lax.element(m, 3).value);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.begin()->first, (GradedIndex{m, 3}));
    EXPECT_EQ(c.begin()->second, Scalar(1));
  }
}

TEST(Decompose, ZeroRejected) {
  const AlgebraSpec spec = elliptic("gl");
  const LaxAlgebra lax(spec);
  EXPECT_THROW(lax.decompose(MatrixFunction(spec.curve, 2)), ZeroElement);
}

TEST(Decompose, BracketReconstructsExactly) {
  const LaxAlgebra lax(elliptic("gl"));
  for (auto [m, k] : {std::pair{2, -3}, {-1, -1}, {0, 3}}) {
    const MatrixFunction f = bracket(lax.element(m, 1).value, lax.element(k, 2).value);
    const GradedCoordinates c = lax.bracket_coordinates(m, 1, k, 2);
    EXPECT_EQ(lax.combine(c), f);
    EXPECT_EQ(lax.decompose(f), c);
    for (const auto& [idx, v] : c) EXPECT_GE(idx.first, m + k);
  }
}

TEST(StructureConstants, ClassicalTensorIsGraded) {
  const AlgebraSpec spec = classical("gl", 2);
  const LaxAlgebra lax(spec);
  const StructureConstants sc = lax.structure_constants(-3, 3);
  EXPECT_EQ(sc.band_low, 0);
  EXPECT_EQ(sc.band_high, 0);
  const auto mats = matrix_basis(spec.algebra);
  for (const auto& [key, coords] : sc.table) {
    const auto& [a, b] = key;
    const ScalarVector expect = basis_coordinates(spec.algebra, commutator(mats[a.second], mats[b.second]));
    GradedCoordinates want;
    for (int u = 0; u < 4; ++u)
      if (!expect[u].is_zero()) want[{a.first + b.first, u}] = expect[u];
    EXPECT_EQ(coords, want);
  }
}

TEST(StructureConstants, Antisymmetric) {
  const LaxAlgebra lax(elliptic("gl"));
  const StructureConstants sc = lax.structure_constants(-2, 2);
  for (const auto& [key, coords] : sc.table) {
    GradedCoordinates neg = sc.table.at({key.second, key.first});
    for (auto& [idx, v] : neg) v = -v;
    EXPECT_EQ(coords, neg);
  }
}

TEST(GradedBasis, AppendixAlgebras) {
  for (const std::string kind : {"so", "sp"}) {
    const AlgebraSpec spec = elliptic(kind);
    const LaxAlgebra lax(spec);
    for (int m = -2; m <= 2; ++m) {
      ASSERT_EQ(lax.graded_basis(m).size(), 3u) << kind << " " << m;
      for (const auto& e : lax.graded_basis(m)) EXPECT_NO_THROW(verify_membership(e.value, spec)) << kind;
    }
  }
}
