#include <gtest/gtest.h>

#include "oracle.hpp"
#include "periodeq/error.hpp"
#include "periodeq/number_theory.hpp"

using namespace periodeq;

TEST(IsPrime, SmallExamples) {
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(561));  // 3 * 11 * 17, Carmichael
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100000) {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(is_prime(n), oracle::trial_prime(n)) << n;
  }
}

TEST(IsPrime, LargeWitnessCases) {
  EXPECT_TRUE(is_prime(2305843009213693951ULL));    // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ULL));   // 2^64 - 59
  EXPECT_FALSE(is_prime(3215031751ULL));            // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));   // strong pseudoprime to bases <= 23
  EXPECT_FALSE(is_prime(4294967297ULL));            // 641 * 6700417
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(16), (Factorization{{2, 4}}));
  EXPECT_EQ(factorize(4294967297ULL), (Factorization{{641, 1}, {6700417, 1}}));
}

TEST(Factorize, ProductOfPrimePowersReconstructs) {
  for (std::uint64_t n = 1; n < 20000; ++n) {
    std::uint64_t prod = 1;
    std::uint64_t last = 1;
    for (const auto& [q, k] : factorize(n)) {
      ASSERT_TRUE(oracle::trial_prime(q));
      ASSERT_GT(q, last);
      last = q;
      for (unsigned i = 0; i < k; ++i) prod *= q;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(5), 2u);
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(11), 2u);
  EXPECT_THROW(primitive_root(9), MathError);
  EXPECT_THROW(primitive_root(2), MathError);
}

TEST(PrimitiveRoot, SmallestGeneratorForEveryPrimeBelow10000) {
  for (std::uint64_t p = 3; p <= 10000; ++p) {
    if (!oracle::trial_prime(p)) continue;
    const std::uint64_t g = primitive_root(p);
    const Factorization fac = factorize(p - 1);
    for (const auto& [q, k] : fac) {
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i < (p - 1) / q; ++i) x = x * g % p;
      ASSERT_NE(x, 1u) << "p=" << p << " q=" << q;
    }
    if (p < 2000) ASSERT_EQ(g, oracle::smallest_primitive_root(p)) << p;
  }
}

TEST(MakeContext, Examples) {
  const PrimeContext a = make_context(5, 2);
  EXPECT_EQ(a.p, 11u);
  EXPECT_EQ(a.g, 2u);
  const PrimeContext b = make_context(4, 1);
  EXPECT_EQ(b.p, 5u);
  EXPECT_EQ(b.g, 2u);
  EXPECT_EQ(b.factors_p_minus_1, (Factorization{{2, 2}}));
  try {
    make_context(4, 2);
    FAIL() << "9 accepted as prime";
  } catch (const MathError& err) {
    EXPECT_EQ(err.kind(), ErrorKind::CompositeP);
    EXPECT_NE(std::string(err.what()).find("9 is not prime"), std::string::npos);
  }
}

TEST(MakeContext, RejectsDegenerateInput) {
  EXPECT_THROW(make_context(0, 3), MathError);
  EXPECT_THROW(make_context(3, 0), MathError);
  EXPECT_THROW(make_context(1, 1), MathError);  // p = 2
  EXPECT_THROW(make_context(~0ULL, 2), MathError);
}

TEST(MakeContext, SucceedsIffPrime) {
  for (std::uint64_t e = 1; e <= 40; ++e) {
    for (std::uint64_t f = 1; e * f + 1 <= 600; ++f) {
      const bool prime = oracle::trial_prime(e * f + 1) && e * f + 1 >= 3;
      bool ok = true;
      try {
        make_context(e, f);
      } catch (const MathError&) {
        ok = false;
      }
      ASSERT_EQ(ok, prime) << e << "," << f;
    }
  }
}

TEST(WithPrimitiveRoot, ValidatesGenerator) {
  const PrimeContext ctx = make_context(6, 1);
  EXPECT_EQ(with_primitive_root(ctx, 5).g, 5u);
  EXPECT_THROW(with_primitive_root(ctx, 2), MathError);  // order 3 mod 7
  EXPECT_EQ(all_primitive_roots(7), (std::vector<std::uint64_t>{3, 5}));
}
