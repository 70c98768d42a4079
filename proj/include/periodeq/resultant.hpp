#ifndef PERIODEQ_RESULTANT_HPP
#define PERIODEQ_RESULTANT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "periodeq/intpoly.hpp"

namespace periodeq {

enum class ResultantEngine {
  Subresultant,  // serial reference
  Modular,       // word-size primes + CRT, residues computed in parallel
};

/// Exact resultant by the subresultant PRS on primitive parts.
mpz_class resultant_subresultant(const IntPoly& p, const IntPoly& q);

/// Exact resultant from residues modulo descending 62-bit primes. The CRT
/// stops once the symmetric reconstruction has been stable for three extra
/// primes and two fresh primes confirm it. `threads` bounds the OpenMP team
/// used for residue batches; the result does not depend on it.
mpz_class resultant_modular(const IntPoly& p, const IntPoly& q, int threads = 1);

/// Both inputs must be nonzero (InvalidArgument otherwise).
mpz_class resultant(const IntPoly& p, const IntPoly& q,
                    ResultantEngine engine = ResultantEngine::Modular);

/// (-1)^(n(n-1)/2) * Res(P, P') / lc(P); requires degree >= 1.
mpz_class discriminant(const IntPoly& p,
                       ResultantEngine engine = ResultantEngine::Modular);

/// Resultant of two polynomials over F_q given as ascending residue vectors
/// with nonzero top entries.
std::uint64_t resultant_mod(std::vector<std::uint64_t> a,
                            std::vector<std::uint64_t> b, std::uint64_t q);

}  // namespace periodeq

#endif  // PERIODEQ_RESULTANT_HPP
