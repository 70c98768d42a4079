#ifndef PERIODEQ_STURM_HPP
#define PERIODEQ_STURM_HPP

#include <cstddef>
#include <vector>

#include "periodeq/intpoly.hpp"

namespace periodeq {

/// Real-root count and number of conjugate complex pairs;
/// n_real + 2 * n_complex_pairs equals the degree.
struct Signature {
  std::size_t n_real = 0;
  std::size_t n_complex_pairs = 0;

  bool operator==(const Signature&) const = default;
};

/// Sturm sequence P, P', -rem, ... where each remainder is a positive multiple
/// of the true signed remainder, divided by its content to curb coefficient
/// growth. Sign variations are unaffected by positive scaling.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);

/// Sign variations of the sequence at -infinity and +infinity.
std::size_t variations_at_minus_infinity(const std::vector<IntPoly>& seq);
std::size_t variations_at_plus_infinity(const std::vector<IntPoly>& seq);

/// Throws NotSquarefree when gcd(P, P') is not constant and InvalidArgument
/// for degree < 1.
Signature signature(const IntPoly& p);

bool is_squarefree(const IntPoly& p);

}  // namespace periodeq

#endif  // PERIODEQ_STURM_HPP
