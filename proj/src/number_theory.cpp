#include "periodeq/number_theory.hpp"

#include <array>
#include <limits>
#include <string>

#include "periodeq/error.hpp"
#include "periodeq/modarith.hpp"

namespace periodeq {

namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                        unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  auto strip = [&](std::uint64_t q) {
    if (n % q != 0) return;
    unsigned k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    out.push_back({q, k});
  };
  strip(2);
  strip(3);
  strip(5);
  // Wheel mod 30: offsets of the residues coprime to 30, starting at 7.
  constexpr std::array<std::uint64_t, 8> kGaps = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t q = 7;
  std::size_t i = 0;
  while (q <= n / q) {
    strip(q);
    q += kGaps[i];
    i = (i + 1) % kGaps.size();
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p,
                       const Factorization& p_minus_1) {
  if (g % p == 0) return false;
  for (const auto& [q, k] : p_minus_1) {
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw MathError(ErrorKind::NotPrime,
                    std::to_string(p) + " is not an odd prime");
  }
  const Factorization fac = factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    if (is_primitive_root(g, p, fac)) return g;
  }
}

std::vector<std::uint64_t> all_primitive_roots(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw MathError(ErrorKind::NotPrime,
                    std::to_string(p) + " is not an odd prime");
  }
  const Factorization fac = factorize(p - 1);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t g = 2; g < p; ++g) {
    if (is_primitive_root(g, p, fac)) roots.push_back(g);
  }
  return roots;
}

PrimeContext make_context(std::uint64_t e, std::uint64_t f) {
  if (e == 0 || f == 0) {
    throw MathError(ErrorKind::InvalidArgument, "e and f must be positive");
  }
  if (e > (std::numeric_limits<std::uint64_t>::max() - 1) / f) {
    throw MathError(ErrorKind::InvalidArgument, "e*f+1 overflows 64 bits");
  }
  const std::uint64_t p = e * f + 1;
  if (p < 3) {
    throw MathError(ErrorKind::InvalidArgument, "p = e*f+1 must be at least 3");
  }
  if (!is_prime(p)) {
    throw MathError(ErrorKind::CompositeP,
                    std::to_string(p) + " is not prime");
  }
  PrimeContext ctx;
  ctx.p = p;
  ctx.e = e;
  ctx.f = f;
  ctx.factors_p_minus_1 = factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    if (is_primitive_root(g, p, ctx.factors_p_minus_1)) {
      ctx.g = g;
      break;
    }
  }
  return ctx;
}

PrimeContext with_primitive_root(const PrimeContext& ctx, std::uint64_t g) {
  if (g == 0 || g >= ctx.p || !is_primitive_root(g, ctx.p, ctx.factors_p_minus_1)) {
    throw MathError(ErrorKind::InvalidArgument,
                    std::to_string(g) + " is not a primitive root of " +
                        std::to_string(ctx.p));
  }
  PrimeContext out = ctx;
  out.g = g;
  return out;
}

}  // namespace periodeq
