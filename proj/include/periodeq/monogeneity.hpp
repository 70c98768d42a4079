#ifndef PERIODEQ_MONOGENEITY_HPP
#define PERIODEQ_MONOGENEITY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string_view>

#include "periodeq/intpoly.hpp"
#include "periodeq/number_theory.hpp"
#include "periodeq/sturm.hpp"

namespace periodeq {

/// sign * p^exponent, kept factored.
struct FieldDiscriminant {
  int sign = 1;
  std::uint64_t p = 0;
  std::uint64_t exponent = 0;

  mpz_class value() const;
  bool operator==(const FieldDiscriminant&) const = default;
};

/// Discriminant of the degree-e subfield of the p-th cyclotomic field:
/// -p^(e-1) when (e-1) mod 4 == 1 and f is odd, +p^(e-1) otherwise.
/// Throws InvalidContext unless p == e*f + 1 is prime.
FieldDiscriminant field_discriminant(std::uint64_t e, std::uint64_t f, std::uint64_t p);

struct IndexSquare {
  mpz_class k_squared;
  mpz_class k;
};

/// k^2 = D / delta by repeated exact division by p, then the sign. Throws
/// NotDivisible or NotPerfectSquare; either one means D = k^2 * delta failed.
IndexSquare index_squared(const mpz_class& poly_discriminant, const FieldDiscriminant& delta);

enum class MatchKind { DirectCyclotomic, ReducedCyclotomic, NoMatch };

std::string_view to_string(MatchKind kind) noexcept;
/// Parses "direct", "reduced" or "none"; throws InvalidArgument.
MatchKind parse_match_kind(std::string_view text);

struct ClassificationRecord {
  std::uint64_t e = 0;
  std::uint64_t f = 0;
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  mpz_class poly_discriminant;
  FieldDiscriminant field_discriminant;
  mpz_class k_squared;
  mpz_class k;
  bool monogenic = false;
  Signature signature;
  MatchKind match_kind = MatchKind::NoMatch;
  IntPoly psi;

  bool operator==(const ClassificationRecord&) const = default;
};

/// Builds psi_e on the modular path and fills in D, delta, k, the signature
/// and the cyclotomic match. The reduced match is only tried when p = 2e+1.
ClassificationRecord classify(const PrimeContext& ctx);

/// Re-checks the record invariants (D = k^2 delta, k*k = k^2, monogenic iff
/// k = 1, match soundness including the polynomial identities). Returns an
/// empty string when valid, otherwise a description of the first violation.
std::string validate(const ClassificationRecord& record);

}  // namespace periodeq

#endif  // PERIODEQ_MONOGENEITY_HPP
