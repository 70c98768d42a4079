#ifndef PERIODEQ_CYCLOTOMIC_HPP
#define PERIODEQ_CYCLOTOMIC_HPP

#include <cstdint>

#include "periodeq/intpoly.hpp"

namespace periodeq {

/// 1 + x + ... + x^(p-1) for prime p; throws NotPrime otherwise.
IntPoly cyclotomic_prime(std::uint64_t p);

/// Palindromic coefficient sequence. The zero polynomial counts as
/// self-reciprocal.
bool is_self_reciprocal(const IntPoly& p);

/// For self-reciprocal P of degree 2e, the degree-e polynomial R with
/// P(x) = x^e * R(x + 1/x). Throws OddDegree, NotSelfReciprocal, or
/// InvalidArgument for the zero polynomial.
IntPoly demoivre_reduce(const IntPoly& p);

/// x^e * R(x + 1/x) expanded, for R of degree e >= 1 (InvalidArgument
/// otherwise).
IntPoly demoivre_unfold(const IntPoly& r);

}  // namespace periodeq

#endif  // PERIODEQ_CYCLOTOMIC_HPP
