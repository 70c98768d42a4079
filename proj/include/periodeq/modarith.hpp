#ifndef PERIODEQ_MODARITH_HPP
#define PERIODEQ_MODARITH_HPP

#include <cstdint>

namespace periodeq {

// Word-size modular arithmetic; every modulus is < 2^64 and operands are
// already reduced.

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  const std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Inverse modulo a prime m via Fermat; a must be nonzero mod m.
inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t m) {
  return pow_mod(a, m - 2, m);
}

}  // namespace periodeq

#endif  // PERIODEQ_MODARITH_HPP
