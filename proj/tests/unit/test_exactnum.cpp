#include <random>

#include <gtest/gtest.h>

#include "laxwb/errors.hpp"
#include "laxwb/exactnum/laurent_series.hpp"
#include "laxwb/exactnum/linear_algebra.hpp"
#include "laxwb/exactnum/rational_function.hpp"

using namespace laxwb;

namespace {

LaurentSeries series(int start, std::vector<long> c, int prec) {
  std::vector<Scalar> s(c.begin(), c.end());
  return LaurentSeries(start, std::move(s), prec);
}

LaurentSeries random_series(std::mt19937& rng, int start, int len) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Scalar> c;
  for (int k = 0; k < len; ++k) c.emplace_back(mpq_class(d(rng)), mpq_class(d(rng), 3));
  if (c[0].is_zero()) c[0] = Scalar(1);
  return LaurentSeries(start, std::move(c), start + len);
}

}  // namespace

TEST(Scalar, FieldOperations) {
  const Scalar a(mpq_class(1, 2), mpq_class(-3));
  const Scalar b = Scalar::i();
  EXPECT_EQ(b * b, Scalar(-1));
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a.conj().im(), mpq_class(3));
  EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
}

TEST(Scalar, StringRoundTrip) {
  for (const char* text : {"0", "3/4", "-2", "i", "-i", "1/2+3/5*i", "-7/3-2*i", "5*i"}) {
    const Scalar s = Scalar::parse(text);
    EXPECT_EQ(Scalar::parse(s.str()), s) << text;
  }
  EXPECT_EQ(Scalar::parse("2/4").str(), "1/2");
  EXPECT_EQ(Scalar::parse("1+i"), Scalar(1) + Scalar::i());
  EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
}

TEST(Polynomial, DivisionAndGcd) {
  const Polynomial x = Polynomial::x();
  const Polynomial p = (x - Polynomial(Scalar(1))) * (x + Polynomial(Scalar(2)));
  const Polynomial q = (x - Polynomial(Scalar(1))) * (x - Polynomial(Scalar::i()));
  EXPECT_EQ(gcd(p, q), x - Polynomial(Scalar(1)));
  auto [quot, rem] = p.divmod(x - Polynomial(Scalar(1)));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quot, x + Polynomial(Scalar(2)));
  EXPECT_EQ(p.shifted(Scalar(1)).evaluate(Scalar(0)), Scalar(0));
}

TEST(Polynomial, GcdOverGaussianRationals) {
  const Polynomial x = Polynomial::x();
  const Polynomial g = (x - Polynomial(Scalar::i())) * (x + Polynomial(Scalar::rational(1, 3))) *
                       (x - Polynomial(Scalar(mpq_class(2, 5), mpq_class(-7, 2))));
  const Polynomial a = g * (x * x + Polynomial(Scalar(2)));
  const Polynomial b = g * (x - Polynomial(Scalar(mpq_class(0), mpq_class(5, 7)))) * Scalar(mpq_class(3, 11), mpq_class(1));
  EXPECT_EQ(gcd(a, b), g.monic());
  EXPECT_EQ(gcd(a, x - Polynomial(Scalar(7))), Polynomial(Scalar(1)));
  EXPECT_EQ(gcd(Polynomial(), b), b.monic());
}

TEST(PolynomialProperty, GcdOfProductsWithCommonFactor) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  auto random_poly = [&](int deg) {
    std::vector<Scalar> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(mpq_class(d(rng), 1 + std::abs(d(rng))), mpq_class(d(rng), 3));
    c.back() = Scalar(mpq_class(5, 2), mpq_class(1));
    return Polynomial(c);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial c = random_poly(2), u = random_poly(3), v = random_poly(2);
    const Polynomial g = gcd(u * c, v * c);
    // c divides the gcd, and the gcd divides both products.
    EXPECT_TRUE(g.divmod(c).second.is_zero()) << trial;
    EXPECT_TRUE((u * c).divmod(g).second.is_zero()) << trial;
    EXPECT_TRUE((v * c).divmod(g).second.is_zero()) << trial;
    EXPECT_TRUE(g.leading().is_one());
    // Random cofactors are coprime except by accident; then the gcd is c.
    if (gcd(u, v).degree() == 0) {
      EXPECT_EQ(g, c.monic()) << trial;
    }
  }
}

TEST(RationalFunction, Canonical) {
  const Polynomial x = Polynomial::x();
  const RationalFunction r(x * x - Polynomial(Scalar(1)), (x - Polynomial(Scalar(1))) * Scalar(2));
  EXPECT_EQ(r, RationalFunction((x + Polynomial(Scalar(1))) * Scalar::rational(1, 2)));
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r * r.inverse(), RationalFunction(Scalar(1)));
  const RationalFunction s(Polynomial(Scalar(1)), x);
  EXPECT_EQ(s.derivative(), RationalFunction(Polynomial(Scalar(-1)), x * x));
  EXPECT_THROW(RationalFunction(x, Polynomial()), std::domain_error);
}

TEST(LaurentSeries, AddCancelsLeadingTerm) {
  const LaurentSeries a = series(-1, {1, 1}, 3);
  const LaurentSeries b = series(-1, {-1}, 3);
  const LaurentSeries sum = ls_add(a, b);
  EXPECT_EQ(sum, series(0, {1}, 3));
  EXPECT_EQ(sum.valuation(), 0);
  EXPECT_EQ(sum.precision(), 3);
}

TEST(LaurentSeries, MultiplyPrecisionRule) {
  // (1 + t)(1 - t) = 1 - t^2, each known to O(t^5): the product is known to O(t^5).
  const LaurentSeries p = ls_mul(series(0, {1, 1}, 5), series(0, {1, -1}, 5));
  EXPECT_EQ(p.coeff(0), Scalar(1));
  EXPECT_EQ(p.coeff(1), Scalar(0));
  EXPECT_EQ(p.coeff(2), Scalar(-1));
  EXPECT_EQ(p.coeff(4), Scalar(0));
  // Hand oracle: min(Ta + vb, Tb + va) = min(5 + 0, 5 + 0).
  EXPECT_EQ(p.precision(), 5);
  const LaurentSeries shifted = ls_mul(series(1, {1}, 6), series(0, {1, -1}, 5));
  EXPECT_EQ(shifted.precision(), 6);
}

TEST(LaurentSeries, MultiplyByZero) {
  const LaurentSeries a = series(-2, {3, 1}, 4);
  const LaurentSeries z(5);
  const LaurentSeries p = ls_mul(a, z);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.precision(), 3);  // 5 + v(a) = 5 - 2
}

TEST(LaurentSeries, Invert) {
  EXPECT_EQ(ls_invert(series(1, {1}, 10)).coeff(-1), Scalar(1));
  const LaurentSeries inv = ls_invert(series(0, {1, 1}, 4));
  // geometric series oracle
  std::vector<Scalar> expect;
  for (int k = 0; k < 4; ++k) expect.emplace_back(k % 2 == 0 ? 1 : -1);
  EXPECT_EQ(inv, LaurentSeries(0, expect, 4));
  EXPECT_THROW(ls_invert(LaurentSeries(4)), ZeroLeadingCoefficient);
}

TEST(LaurentSeries, DerivativeAndResidue) {
  EXPECT_EQ(ls_derivative(series(3, {1}, 8)), series(2, {3}, 7));
  EXPECT_EQ(ls_derivative(series(-1, {1}, 8)), series(-2, {-1}, 7));
  EXPECT_TRUE(ls_derivative(series(0, {5}, 8)).is_zero());
  EXPECT_EQ(ls_residue(series(-1, {2, 5}, 3)), Scalar(2));
  EXPECT_EQ(ls_residue(series(-2, {1}, 3)), Scalar(0));
  EXPECT_THROW(ls_residue(series(-3, {1}, -1)), InsufficientPrecision);
}

TEST(LaurentSeriesProperty, RingAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentSeries a = random_series(rng, trial % 5 - 2, 6);
    const LaurentSeries b = random_series(rng, trial % 3 - 1, 7);
    const LaurentSeries c = random_series(rng, trial % 4 - 2, 5);
    const LaurentSeries l1 = (a * b) * c;
    const LaurentSeries r1 = a * (b * c);
    const int p1 = std::min(l1.precision(), r1.precision());
    EXPECT_EQ(l1.truncated(p1), r1.truncated(p1));
    const LaurentSeries l2 = a * (b + c);
    const LaurentSeries r2 = a * b + a * c;
    const int p2 = std::min(l2.precision(), r2.precision());
    EXPECT_EQ(l2.truncated(p2), r2.truncated(p2));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(LaurentSeriesProperty, ResidueOfDerivativeVanishes) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentSeries a = random_series(rng, -4 + trial % 4, 8);
    EXPECT_EQ(ls_residue(ls_derivative(a)), Scalar(0));
  }
}

TEST(LaurentSeriesProperty, InverseIsTwoSided) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentSeries a = random_series(rng, -3 + trial % 6, 7);
    const LaurentSeries inv = ls_invert(a);
    const LaurentSeries left = a * inv;
    const LaurentSeries right = inv * a;
    EXPECT_EQ(left, right);
    EXPECT_EQ(left, LaurentSeries::monomial(Scalar(1), 0, left.precision()));
    EXPECT_GE(left.precision(), 1);
  }
}

TEST(LinearAlgebra, NullspaceAndSolve) {
  const ScalarMatrix m = ScalarMatrix::from_rows({{Scalar(1), Scalar(2), Scalar(3)},
                                                   {Scalar(2), Scalar(4), Scalar(6)}}, 3);
  EXPECT_EQ(rank(m), 1);
  const auto kernel = nullspace(m);
  ASSERT_EQ(kernel.size(), 2u);
  for (const auto& v : kernel) EXPECT_TRUE(is_zero(m * v));
  const auto sol = solve_affine(m, {Scalar(1), Scalar(2)});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(m * *sol, (ScalarVector{Scalar(1), Scalar(2)}));
  EXPECT_FALSE(solve_affine(m, {Scalar(1), Scalar(3)}).has_value());
}

TEST(LinearAlgebra, EchelonBasisColumnOrder) {
  const std::vector<ScalarVector> span = {{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}};
  const auto basis = echelon_basis(span, {1, 0});
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], (ScalarVector{Scalar(0), Scalar(1)}));
  EXPECT_EQ(basis[1], (ScalarVector{Scalar(1), Scalar(0)}));
}
