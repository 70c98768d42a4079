#ifndef PERIODEQ_PERIOD_HPP
#define PERIODEQ_PERIOD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "periodeq/cycint.hpp"
#include "periodeq/intpoly.hpp"
#include "periodeq/number_theory.hpp"

namespace periodeq {

/// The monic degree-e polynomial whose roots are the e Gaussian periods of
/// ctx. Its x^(e-1) coefficient is +1 because the periods sum to -1.
struct PeriodPolynomial {
  PrimeContext ctx;
  IntPoly poly;
};

/// Exponents g^(k*e + i) mod p for k = 0..f-1, i.e. the coset of the
/// index-e subgroup that makes up the i-th period.
std::vector<std::uint64_t> period_exponents(const PrimeContext& ctx, std::uint64_t i);

/// i-th Gaussian period as an exact element of Z[zeta_p]; throws
/// IndexOutOfRange for i >= e.
CycInt period(const PrimeContext& ctx, std::uint64_t i);

/// Serial reference: expands prod_k (x - eta_k) with coefficients in
/// Z[zeta_p] (computed modulo zeta^p - 1, folded at the end) and demands
/// that every coefficient be a rational integer.
PeriodPolynomial period_polynomial_exact(const PrimeContext& ctx);

/// The same polynomial built modulo primes q = 1 (mod p) above 2^62, with
/// zeta mapped to an element of order p in F_q, then Chinese-remaindered.
/// The number of primes is fixed by |coeff of x^(e-j)| <= C(e,j) f^j.
/// Residues for different q are built by an OpenMP team of `threads`.
PeriodPolynomial period_polynomial_modular(const PrimeContext& ctx, int threads = 1);

/// max_j C(e,j) * f^j, the coefficient bound used by the modular path.
mpz_class period_coefficient_bound(std::uint64_t e, std::uint64_t f);

}  // namespace periodeq

#endif  // PERIODEQ_PERIOD_HPP
