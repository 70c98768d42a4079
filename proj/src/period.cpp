#include "periodeq/period.hpp"

#include <string>
#include <utility>

#include "periodeq/crt.hpp"
#include "periodeq/error.hpp"
#include "periodeq/modarith.hpp"
#include "periodeq/word_primes.hpp"

namespace periodeq {

namespace {

std::vector<std::vector<std::uint64_t>> all_cosets(const PrimeContext& ctx) {
  std::vector<std::vector<std::uint64_t>> cosets;
  cosets.reserve(ctx.e);
  for (std::uint64_t i = 0; i < ctx.e; ++i) cosets.push_back(period_exponents(ctx, i));
  return cosets;
}

// prod_k (x - eta_k) over F_q, eta_k = sum of zeta^s over the k-th coset.
std::vector<std::uint64_t> residue_polynomial(
    const std::vector<std::vector<std::uint64_t>>& cosets, std::uint64_t p,
    std::uint64_t q) {
  std::uint64_t zeta = 1;
  for (std::uint64_t h = 2; zeta == 1; ++h) zeta = pow_mod(h, (q - 1) / p, q);
  std::vector<std::uint64_t> zeta_pow(p);
  zeta_pow[0] = 1;
  for (std::uint64_t t = 1; t < p; ++t) zeta_pow[t] = mul_mod(zeta_pow[t - 1], zeta, q);

  std::vector<std::uint64_t> poly{1};
  poly.reserve(cosets.size() + 1);
  for (const auto& coset : cosets) {
    std::uint64_t eta = 0;
    for (std::uint64_t s : coset) eta = add_mod(eta, zeta_pow[s], q);
    const std::uint64_t minus_eta = eta == 0 ? 0 : q - eta;
    poly.push_back(poly.back());
    for (std::size_t i = poly.size() - 2; i > 0; --i) {
      poly[i] = add_mod(poly[i - 1], mul_mod(minus_eta, poly[i], q), q);
    }
    poly[0] = mul_mod(minus_eta, poly[0], q);
  }
  return poly;
}

}  // namespace

std::vector<std::uint64_t> period_exponents(const PrimeContext& ctx, std::uint64_t i) {
  if (i >= ctx.e) {
    throw MathError(ErrorKind::IndexOutOfRange,
                    "period index " + std::to_string(i) + " outside [0, " +
                        std::to_string(ctx.e) + ")");
  }
  std::vector<std::uint64_t> out;
  out.reserve(ctx.f);
  const std::uint64_t step = pow_mod(ctx.g, ctx.e, ctx.p);
  std::uint64_t x = pow_mod(ctx.g, i, ctx.p);
  for (std::uint64_t k = 0; k < ctx.f; ++k) {
    out.push_back(x);
    x = mul_mod(x, step, ctx.p);
  }
  return out;
}

CycInt period(const PrimeContext& ctx, std::uint64_t i) {
  std::vector<mpz_class> cyclic(ctx.p);
  for (std::uint64_t s : period_exponents(ctx, i)) cyclic[s] += 1;
  return CycInt::from_cyclic(ctx.p, std::move(cyclic));
}

PeriodPolynomial period_polynomial_exact(const PrimeContext& ctx) {
  const std::uint64_t p = ctx.p;
  const auto cosets = all_cosets(ctx);

  // coefficient i of the running product, each an element of Z[x]/(x^p - 1)
  std::vector<std::vector<mpz_class>> poly;
  poly.reserve(ctx.e + 1);
  poly.emplace_back(p);
  poly[0][0] = 1;
  std::vector<mpz_class> scaled(p);

  for (const auto& coset : cosets) {
    poly.push_back(poly.back());
    for (std::size_t i = poly.size() - 2;; --i) {
      // scaled = eta * poly[i]
      for (auto& v : scaled) v = 0;
      const auto& src = poly[i];
      for (std::uint64_t t = 0; t < p; ++t) {
        if (src[t] == 0) continue;
        for (std::uint64_t s : coset) {
          std::uint64_t k = t + s;
          if (k >= p) k -= p;
          scaled[k] += src[t];
        }
      }
      auto& dst = poly[i];
      if (i == 0) {
        for (std::uint64_t t = 0; t < p; ++t) mpz_neg(dst[t].get_mpz_t(), scaled[t].get_mpz_t());
        break;
      }
      const auto& lower = poly[i - 1];
      for (std::uint64_t t = 0; t < p; ++t) {
        mpz_sub(dst[t].get_mpz_t(), lower[t].get_mpz_t(), scaled[t].get_mpz_t());
      }
    }
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const CycInt c = CycInt::from_cyclic(p, std::move(poly[i]));
    auto value = c.rational_value();
    if (!value) {
      throw MathError(ErrorKind::NonIntegerCoefficient,
                      "coefficient of x^" + std::to_string(i) + " for p=" +
                          std::to_string(p) + ", e=" + std::to_string(ctx.e) +
                          " is not a rational integer");
    }
    coeffs.push_back(std::move(*value));
  }
  return {ctx, IntPoly(std::move(coeffs))};
}

mpz_class period_coefficient_bound(std::uint64_t e, std::uint64_t f) {
  mpz_class best = 1;
  mpz_class binom = 1;
  mpz_class fpow = 1;
  for (std::uint64_t j = 1; j <= e; ++j) {
    binom *= static_cast<unsigned long>(e - j + 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
    fpow *= static_cast<unsigned long>(f);
    mpz_class term = binom * fpow;
    if (term > best) best = std::move(term);
  }
  return best;
}

PeriodPolynomial period_polynomial_modular(const PrimeContext& ctx, int threads) {
  const auto cosets = all_cosets(ctx);
  // Symmetric reconstruction is exact once prod(q) > 2 * bound.
  const mpz_class need = 2 * period_coefficient_bound(ctx.e, ctx.f);
  std::size_t count = 1;
  {
    // each q exceeds 2^62
    const std::size_t bits = mpz_sizeinbase(need.get_mpz_t(), 2);
    count = bits / 62 + 1;
  }
  const std::vector<std::uint64_t> primes = primes_congruent_one(ctx.p, count);

  std::vector<std::vector<std::uint64_t>> residues(primes.size());
  const long n = static_cast<long>(primes.size());
  threads = threads < 1 ? 1 : threads;
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
  for (long i = 0; i < n; ++i) {
    residues[i] = residue_polynomial(cosets, ctx.p, primes[i]);
  }

  std::vector<mpz_class> coeffs(ctx.e + 1);
  for (std::size_t j = 0; j <= ctx.e; ++j) {
    SymmetricCrt crt;
    for (std::size_t i = 0; i < primes.size(); ++i) crt.add(residues[i][j], primes[i]);
    coeffs[j] = crt.value();
  }
  return {ctx, IntPoly(std::move(coeffs))};
}

}  // namespace periodeq
