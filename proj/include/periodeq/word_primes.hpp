#ifndef PERIODEQ_WORD_PRIMES_HPP
#define PERIODEQ_WORD_PRIMES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace periodeq {

/// The i-th prime below 2^62, counting downward (index 0 is the largest).
/// The sequence is fixed, so CRT consumers see the same primes on every run.
/// Thread-safe; the backing table grows on demand.
std::uint64_t descending_word_prime(std::size_t index);

/// The smallest `count` primes q = k*p + 1 above 2^62, in increasing order.
/// Every such q has an element of multiplicative order p.
std::vector<std::uint64_t> primes_congruent_one(std::uint64_t p,
                                                std::size_t count);

}  // namespace periodeq

#endif  // PERIODEQ_WORD_PRIMES_HPP
