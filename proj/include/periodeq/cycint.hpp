#ifndef PERIODEQ_CYCINT_HPP
#define PERIODEQ_CYCINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace periodeq {

/// Element of Z[zeta], zeta a primitive p-th root of unity, stored on the
/// basis zeta^0 .. zeta^(p-2). zeta^(p-1) is eliminated through
/// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)), so the representation is
/// unique and an element is a rational integer iff entries 1..p-2 vanish.
class CycInt {
 public:
  /// Zero of Z[zeta_p]; p must be an odd prime (not checked here).
  explicit CycInt(std::uint64_t p);

  static CycInt from_integer(std::uint64_t p, const mpz_class& n);
  /// zeta^k with k taken mod p.
  static CycInt zeta_power(std::uint64_t p, std::uint64_t k);
  /// From coefficients on zeta^0 .. zeta^(p-1) (length p), i.e. modulo
  /// x^p - 1, folded to the canonical basis.
  static CycInt from_cyclic(std::uint64_t p, std::vector<mpz_class> cyclic);

  std::uint64_t prime() const noexcept { return p_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  bool is_rational() const;
  std::optional<mpz_class> rational_value() const;

  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::uint64_t p_;
  std::vector<mpz_class> coeffs_;
};

/// Ring operations; throw MismatchedP when the primes differ.
CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_mul(const CycInt& a, const CycInt& b);

}  // namespace periodeq

#endif  // PERIODEQ_CYCINT_HPP
