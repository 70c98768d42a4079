#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "periodeq/cyclotomic.hpp"
#include "periodeq/error.hpp"
#include "periodeq/sturm.hpp"

using namespace periodeq;

TEST(Signature, Examples) {
  EXPECT_EQ(signature(IntPoly::parse("x^2+1")), (Signature{0, 1}));
  EXPECT_EQ(signature(IntPoly::parse("x^2-2")), (Signature{2, 0}));
  EXPECT_EQ(signature(IntPoly::parse("x^3-x^2-2x-8")), (Signature{1, 1}));
  EXPECT_EQ(signature(IntPoly::parse("x^5+x^4-4x^3-3x^2+3x+1")), (Signature{5, 0}));
  EXPECT_EQ(signature(cyclotomic_prime(7)), (Signature{0, 3}));
  EXPECT_EQ(signature(IntPoly::parse("-x^3+x")), (Signature{3, 0}));
  EXPECT_EQ(signature(IntPoly::parse("2x+1")), (Signature{1, 0}));
}

TEST(Signature, Errors) {
  try {
    signature(oracle::from_roots({1, 1, -2}));
    FAIL();
  } catch (const MathError& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotSquarefree);
  }
  EXPECT_THROW(signature(IntPoly::constant(3)), MathError);
  EXPECT_THROW(signature(IntPoly{}), MathError);
  EXPECT_FALSE(is_squarefree(oracle::from_roots({4, 4})));
  EXPECT_TRUE(is_squarefree(oracle::from_roots({4, 5})));
}

TEST(Signature, DistinctLinearFactorsAreAllReal) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> root(-1000, 1000);
  for (int t = 0; t < 200; ++t) {
    std::set<long> roots;
    const std::size_t n = 1 + rng() % 15;
    while (roots.size() < n) roots.insert(root(rng));
    const IntPoly p = oracle::from_roots({roots.begin(), roots.end()}) * mpz_class(t % 2 ? -3 : 1);
    ASSERT_EQ(signature(p), (Signature{n, 0}));
  }
}

TEST(Signature, RealFactorsTimesPositiveQuadratics) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> root(-50, 50);
  for (int t = 0; t < 100; ++t) {
    std::set<long> roots;
    const std::size_t n = rng() % 6;
    while (roots.size() < n) roots.insert(root(rng));
    IntPoly p = roots.empty() ? IntPoly::constant(1) : oracle::from_roots({roots.begin(), roots.end()});
    const std::size_t pairs = 1 + rng() % 4;
    for (std::size_t i = 0; i < pairs; ++i) {
      // (x - a)^2 + b^2 with distinct (a, b)
      const long a = static_cast<long>(i) * 7 - 3;
      const long b = static_cast<long>(i) + 1;
      p = p * IntPoly::from_ascending({a * a + b * b, -2 * a, 1});
    }
    ASSERT_EQ(signature(p), (Signature{n, pairs}));
  }
}

TEST(SturmSequence, VariationCountsBracketRoots) {
  const auto seq = sturm_sequence(oracle::from_roots({-3, 0, 5}));
  ASSERT_GE(seq.size(), 2u);
  EXPECT_EQ(variations_at_minus_infinity(seq) - variations_at_plus_infinity(seq), 3u);
}
