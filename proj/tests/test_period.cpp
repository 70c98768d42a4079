#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "periodeq/cycint.hpp"
#include "periodeq/cyclotomic.hpp"
#include "periodeq/error.hpp"
#include "periodeq/period.hpp"
#include "periodeq/sturm.hpp"

using namespace periodeq;

namespace {

std::vector<PrimeContext> contexts_up_to(std::uint64_t p_max) {
  std::vector<PrimeContext> out;
  for (std::uint64_t p = 3; p <= p_max; ++p) {
    if (!oracle::trial_prime(p)) continue;
    for (std::uint64_t e = 1; e <= p - 1; ++e) {
      if ((p - 1) % e == 0) out.push_back(make_context(e, (p - 1) / e));
    }
  }
  return out;
}

}  // namespace

TEST(CycInt, Arithmetic) {
  const CycInt z = CycInt::zeta_power(5, 1);
  EXPECT_EQ(z.coeffs(), (std::vector<mpz_class>{0, 1, 0, 0}));
  const CycInt z4 = CycInt::zeta_power(5, 4);
  EXPECT_EQ(z4.coeffs(), (std::vector<mpz_class>{-1, -1, -1, -1}));
  EXPECT_EQ(z * z4, CycInt::from_integer(5, 1));
  EXPECT_EQ(CycInt::zeta_power(5, 9), z4);
  EXPECT_EQ(CycInt::zeta_power(5, 0), CycInt::from_integer(5, 1));

  CycInt sum(5);
  for (std::uint64_t k = 0; k < 5; ++k) sum = sum + CycInt::zeta_power(5, k);
  EXPECT_TRUE(sum.is_rational());
  EXPECT_EQ(sum.rational_value(), mpz_class(0));
  EXPECT_FALSE(z.is_rational());
  EXPECT_FALSE(z.rational_value().has_value());
  EXPECT_EQ(z - z, CycInt(5));
}

TEST(CycInt, MismatchedPrimes) {
  try {
    cyc_add(CycInt::zeta_power(5, 1), CycInt::zeta_power(7, 1));
    FAIL();
  } catch (const MathError& err) {
    EXPECT_EQ(err.kind(), ErrorKind::MismatchedP);
  }
  EXPECT_THROW(cyc_mul(CycInt(5), CycInt(7)), MathError);
}

TEST(CycInt, FromCyclicFolds) {
  EXPECT_EQ(CycInt::from_cyclic(5, {3, 0, 0, 0, 1}),
            CycInt::from_integer(5, 3) + CycInt::zeta_power(5, 4));
  EXPECT_EQ(CycInt::from_cyclic(5, {2, 2, 2, 2, 2}), CycInt(5));
}

TEST(Period, PentagonPeriods) {
  const PrimeContext ctx = make_context(2, 2);
  EXPECT_EQ(period(ctx, 0), CycInt::zeta_power(5, 1) + CycInt::zeta_power(5, 4));
  EXPECT_EQ(period(ctx, 1), CycInt::zeta_power(5, 2) + CycInt::zeta_power(5, 3));
  try {
    period(ctx, 2);
    FAIL();
  } catch (const MathError& err) {
    EXPECT_EQ(err.kind(), ErrorKind::IndexOutOfRange);
  }
  EXPECT_EQ(period_exponents(ctx, 0), (std::vector<std::uint64_t>{1, 4}));
}

TEST(Period, PeriodsSumToMinusOne) {
  for (const auto& ctx : contexts_up_to(60)) {
    CycInt sum(ctx.p);
    for (std::uint64_t i = 0; i < ctx.e; ++i) sum = sum + period(ctx, i);
    ASSERT_EQ(sum.rational_value(), mpz_class(-1)) << ctx.e << "," << ctx.f;
  }
}

TEST(Period, ExponentsPartitionUnits) {
  for (const auto& ctx : contexts_up_to(100)) {
    std::vector<int> seen(ctx.p, 0);
    for (std::uint64_t i = 0; i < ctx.e; ++i) {
      for (auto x : period_exponents(ctx, i)) ++seen[x];
    }
    ASSERT_EQ(seen[0], 0);
    for (std::uint64_t x = 1; x < ctx.p; ++x) ASSERT_EQ(seen[x], 1);
  }
}

TEST(PeriodPolynomial, FrozenSmallCases) {
  struct Case {
    std::uint64_t e, f;
    std::vector<mpz_class> descending;
  };
  const Case cases[] = {
      {2, 2, {1, 1, -1}},
      {3, 2, {1, 1, -2, -1}},
      {3, 4, {1, 1, -4, 1}},
      {3, 6, {1, 1, -6, -7}},
      {4, 3, {1, 1, 2, -4, 3}},
      {4, 4, {1, 1, -6, -1, 1}},
      {5, 2, {1, 1, -4, -3, 3, 1}},
      {6, 3, {1, 1, 2, -8, -1, 5, 7}},
      {3, 10, {1, 1, -10, -8}},
      {3, 12, {1, 1, -12, 11}},
  };
  for (const auto& c : cases) {
    const PrimeContext ctx = make_context(c.e, c.f);
    const IntPoly expected = IntPoly::from_descending(c.descending);
    EXPECT_EQ(period_polynomial_exact(ctx).poly, expected) << c.e << "," << c.f;
    EXPECT_EQ(period_polynomial_modular(ctx).poly, expected) << c.e << "," << c.f;
  }
}

TEST(PeriodPolynomial, MatchesFloatingPointExpansion) {
  for (const auto& ctx : contexts_up_to(60)) {
    if (ctx.e > 12) continue;
    ASSERT_EQ(period_polynomial_modular(ctx).poly, oracle::numeric_period_polynomial(ctx.e, ctx.f, ctx.g))
        << ctx.e << "," << ctx.f;
  }
}

TEST(PeriodPolynomial, ExactEqualsModularUpTo300) {
  for (const auto& ctx : contexts_up_to(300)) {
    ASSERT_EQ(period_polynomial_exact(ctx).poly, period_polynomial_modular(ctx).poly)
        << ctx.e << "," << ctx.f;
  }
}

TEST(PeriodPolynomial, ModularIndependentOfThreads) {
  const PrimeContext ctx = make_context(48, 4);
  EXPECT_EQ(period_polynomial_modular(ctx, 1).poly, period_polynomial_modular(ctx, 4).poly);
}

TEST(PeriodPolynomial, PrimitiveRootIndependenceUpTo200) {
  for (const auto& ctx : contexts_up_to(200)) {
    const IntPoly reference = period_polynomial_modular(ctx).poly;
    for (auto g : all_primitive_roots(ctx.p)) {
      ASSERT_EQ(period_polynomial_modular(with_primitive_root(ctx, g)).poly, reference)
          << ctx.e << "," << ctx.f << " g=" << g;
    }
  }
}

TEST(PeriodPolynomial, StructuralInvariantsUpTo300) {
  for (const auto& ctx : contexts_up_to(300)) {
    const IntPoly psi = period_polynomial_modular(ctx).poly;
    ASSERT_EQ(psi.degree(), ctx.e);
    ASSERT_EQ(psi.leading(), 1);
    if (ctx.e >= 2) ASSERT_EQ(psi.coeff(ctx.e - 1), 1);
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), mpz_class(ctx.f).get_mpz_t(), ctx.e);
    ASSERT_LE(abs(psi.coeff(0)), bound);
    ASSERT_TRUE(is_squarefree(psi)) << ctx.e << "," << ctx.f;
    if (ctx.f == 1) ASSERT_EQ(psi, cyclotomic_prime(ctx.p));
  }
}

TEST(PeriodPolynomial, DegreeNinetySix) {
  const IntPoly cyc = period_polynomial_modular(make_context(96, 1)).poly;
  EXPECT_EQ(cyc, cyclotomic_prime(97));
  for (std::size_t i = 0; i <= 96; ++i) EXPECT_EQ(cyc.coeff(i), 1);

  const IntPoly psi = period_polynomial_modular(make_context(96, 2)).poly;
  EXPECT_EQ(psi.coeff(0), 1);
  EXPECT_EQ(psi.coeff(1), -48);
  EXPECT_EQ(psi.coeff(2), -1176);
  EXPECT_EQ(psi.coeff(96), 1);
  EXPECT_EQ(psi.coeff(95), 1);
  EXPECT_EQ(psi.coeff(94), -95);
  EXPECT_EQ(psi.coeff(93), -94);
  EXPECT_EQ(psi.coeff(3), 18424);
  EXPECT_EQ(psi.coeff(4), 230300);
  EXPECT_EQ(psi.coeff(5), -2118760);
  EXPECT_EQ(psi.coeff(6), -18009460);
  EXPECT_EQ(demoivre_unfold(psi), cyclotomic_prime(193));
}

TEST(PeriodPolynomial, CoefficientBound) {
  EXPECT_EQ(period_coefficient_bound(2, 2), 4);
  EXPECT_EQ(period_coefficient_bound(3, 1), 3);
}
