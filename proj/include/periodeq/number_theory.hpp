#ifndef PERIODEQ_NUMBER_THEORY_HPP
#define PERIODEQ_NUMBER_THEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace periodeq {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases, which is proven exact below 3.3e24).
bool is_prime(std::uint64_t n);

/// Trial division over a 2,3,5 wheel. Factors are returned in increasing
/// order; factorize(1) is empty.
Factorization factorize(std::uint64_t n);

/// True iff g generates (Z/pZ)^*, given the factorization of p-1.
bool is_primitive_root(std::uint64_t g, std::uint64_t p,
                       const Factorization& p_minus_1);

/// Smallest positive primitive root of an odd prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// The data fixing one period equation: p = e*f + 1 prime and a generator g
/// of the multiplicative group mod p.
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint64_t e = 0;
  std::uint64_t f = 0;
  std::uint64_t g = 0;
  Factorization factors_p_minus_1;
};

/// Context with the smallest primitive root. Throws CompositeP when e*f+1 is
/// not prime and InvalidArgument for e or f zero (or p < 3).
PrimeContext make_context(std::uint64_t e, std::uint64_t f);

/// Same context with a different generator; throws InvalidArgument unless g
/// is a primitive root of ctx.p.
PrimeContext with_primitive_root(const PrimeContext& ctx, std::uint64_t g);

/// All primitive roots of p in increasing order.
std::vector<std::uint64_t> all_primitive_roots(std::uint64_t p);

}  // namespace periodeq

#endif  // PERIODEQ_NUMBER_THEORY_HPP
