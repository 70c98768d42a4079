#include <gtest/gtest.h>

#include "oracle.hpp"
#include "periodeq/cyclotomic.hpp"
#include "periodeq/error.hpp"
#include "periodeq/monogeneity.hpp"
#include "periodeq/resultant.hpp"

using namespace periodeq;

namespace {

mpz_class power(long base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), mpz_class(base).get_mpz_t(), exp);
  return out;
}

ErrorKind index_error(const mpz_class& d, const FieldDiscriminant& delta) {
  try {
    index_squared(d, delta);
  } catch (const MathError& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error for " << d.get_str();
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(FieldDiscriminant, SignRule) {
  EXPECT_EQ(field_discriminant(5, 2, 11), (FieldDiscriminant{1, 11, 4}));
  EXPECT_EQ(field_discriminant(6, 1, 7), (FieldDiscriminant{-1, 7, 5}));
  EXPECT_EQ(field_discriminant(10, 1, 11), (FieldDiscriminant{-1, 11, 9}));
  EXPECT_EQ(field_discriminant(6, 3, 19), (FieldDiscriminant{-1, 19, 5}));
  EXPECT_EQ(field_discriminant(6, 2, 13), (FieldDiscriminant{1, 13, 5}));
  EXPECT_EQ(field_discriminant(2, 2, 5), (FieldDiscriminant{1, 5, 1}));
  EXPECT_EQ(field_discriminant(1, 2, 3), (FieldDiscriminant{1, 3, 0}));
  EXPECT_EQ(field_discriminant(10, 1, 11).value(), -power(11, 9));
  EXPECT_THROW(field_discriminant(4, 2, 9), MathError);
  EXPECT_THROW(field_discriminant(5, 2, 13), MathError);
}

TEST(IndexSquared, DedekindCubic) {
  const IndexSquare idx = index_squared(-2012, FieldDiscriminant{-1, 503, 1});
  EXPECT_EQ(idx.k_squared, 4);
  EXPECT_EQ(idx.k, 2);
}

TEST(IndexSquared, Examples) {
  EXPECT_EQ(index_squared(power(11, 4), {1, 11, 4}).k_squared, 1);
  EXPECT_EQ(index_squared(19773, {1, 13, 3}).k_squared, 9);
  EXPECT_EQ(index_squared(19652, {1, 17, 3}).k_squared, 4);
  EXPECT_EQ(index_error(12, {1, 5, 1}), ErrorKind::NotDivisible);
  EXPECT_EQ(index_error(15, {1, 5, 1}), ErrorKind::NotPerfectSquare);
  EXPECT_EQ(index_error(-20, {1, 5, 1}), ErrorKind::NotPerfectSquare);
  EXPECT_EQ(index_error(0, {1, 5, 1}), ErrorKind::InvalidArgument);
}

TEST(MatchKind, Names) {
  for (auto kind : {MatchKind::DirectCyclotomic, MatchKind::ReducedCyclotomic, MatchKind::NoMatch}) {
    EXPECT_EQ(parse_match_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_match_kind("other"), MathError);
}

TEST(Classify, ReferenceExamples) {
  const auto r5 = classify(make_context(5, 2));
  EXPECT_TRUE(r5.monogenic);
  EXPECT_EQ(r5.signature, (Signature{5, 0}));
  EXPECT_EQ(r5.match_kind, MatchKind::ReducedCyclotomic);

  const auto r10 = classify(make_context(10, 1));
  EXPECT_TRUE(r10.monogenic);
  EXPECT_EQ(r10.signature, (Signature{0, 5}));
  EXPECT_EQ(r10.poly_discriminant, -power(11, 9));
  EXPECT_EQ(r10.match_kind, MatchKind::DirectCyclotomic);
}

TEST(Classify, FrozenSmallCases) {
  struct Case {
    std::uint64_t e, f;
    mpz_class d, k_squared;
  };
  const Case cases[] = {
      {3, 4, 169, 1},
      {3, 2, 49, 1},
      {3, 6, 361, 1},
      {3, 10, 3844, 4},
      {3, 12, 1369, 1},
      {4, 3, 19773, 9},
      {4, 4, 19652, 4},
      {6, 3, mpz_class("-14680790971"), 5929},
  };
  for (const auto& c : cases) {
    const auto r = classify(make_context(c.e, c.f));
    EXPECT_EQ(r.poly_discriminant, c.d) << c.e << "," << c.f;
    EXPECT_EQ(r.k_squared, c.k_squared) << c.e << "," << c.f;
    EXPECT_EQ(r.monogenic, c.k_squared == 1);
    if (c.e == 3) {
      const auto& q = r.psi;
      EXPECT_EQ(r.poly_discriminant, oracle::cubic_discriminant(q.coeff(2), q.coeff(1), q.coeff(0)));
    }
    EXPECT_EQ(validate(r), "");
  }
}

TEST(Classify, SignatureLawAndIndexUpTo300) {
  for (std::uint64_t p = 3; p <= 300; ++p) {
    if (!oracle::trial_prime(p)) continue;
    for (std::uint64_t e = 1; e < p; ++e) {
      if ((p - 1) % e) continue;
      const std::uint64_t f = (p - 1) / e;
      const auto r = classify(make_context(e, f));
      ASSERT_EQ(r.signature.n_real, f % 2 == 0 ? e : 0) << e << "," << f;
      ASSERT_EQ(r.signature.n_real + 2 * r.signature.n_complex_pairs, e);
      ASSERT_GT(r.k_squared, 0);
      ASSERT_EQ(sgn(r.poly_discriminant), r.field_discriminant.sign);
      ASSERT_EQ(r.poly_discriminant, discriminant(r.psi, ResultantEngine::Subresultant));
      if (r.match_kind == MatchKind::DirectCyclotomic) ASSERT_EQ(f, 1u);
      if (r.match_kind == MatchKind::ReducedCyclotomic) ASSERT_EQ(f, 2u);
      ASSERT_EQ(validate(r), "") << e << "," << f;
    }
  }
}

TEST(Classify, IndexIsSquareForModerateDegreesUpTo2000) {
  for (std::uint64_t p = 3; p <= 2000; ++p) {
    if (!oracle::trial_prime(p)) continue;
    for (std::uint64_t e = 1; e <= 24 && e < p; ++e) {
      if ((p - 1) % e) continue;
      const auto r = classify(make_context(e, (p - 1) / e));
      ASSERT_EQ(r.k * r.k, r.k_squared);
      ASSERT_EQ(r.k_squared * r.field_discriminant.value(), r.poly_discriminant);
    }
  }
}

TEST(Classify, QuadraticsAreMonogenic) {
  for (std::uint64_t f = 1; 2 * f + 1 <= 10000; ++f) {
    if (!oracle::trial_prime(2 * f + 1)) continue;
    ASSERT_TRUE(classify(make_context(2, f)).monogenic) << 2 * f + 1;
  }
}

TEST(Validate, RejectsTamperedRecords) {
  const auto good = classify(make_context(5, 2));
  ASSERT_EQ(validate(good), "");

  auto bad = good;
  bad.k = 2;
  EXPECT_NE(validate(bad), "");

  bad = good;
  bad.monogenic = false;
  EXPECT_NE(validate(bad), "");

  bad = good;
  bad.match_kind = MatchKind::DirectCyclotomic;
  EXPECT_NE(validate(bad), "");

  bad = good;
  bad.poly_discriminant += 1;
  EXPECT_NE(validate(bad), "");

  bad = good;
  bad.psi = cyclotomic_prime(11);
  EXPECT_NE(validate(bad), "");
}

TEST(ErrorKinds, ContradictionsAreSeparated) {
  EXPECT_TRUE(is_contradiction(ErrorKind::NotDivisible));
  EXPECT_TRUE(is_contradiction(ErrorKind::NotPerfectSquare));
  EXPECT_TRUE(is_contradiction(ErrorKind::NonIntegerCoefficient));
  EXPECT_TRUE(is_contradiction(ErrorKind::InvariantViolation));
  EXPECT_FALSE(is_contradiction(ErrorKind::CompositeP));
  EXPECT_FALSE(is_contradiction(ErrorKind::InvalidArgument));
  EXPECT_EQ(to_string(ErrorKind::NotPerfectSquare), "NotPerfectSquare");
}
