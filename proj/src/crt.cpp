#include "periodeq/crt.hpp"

#include "periodeq/modarith.hpp"

namespace periodeq {

bool SymmetricCrt::add(std::uint64_t residue, std::uint64_t q) {
  const std::uint64_t current = mpz_fdiv_ui(value_.get_mpz_t(), q);
  const std::uint64_t m_mod = mpz_fdiv_ui(modulus_.get_mpz_t(), q);
  const std::uint64_t t =
      mul_mod(sub_mod(residue % q, current, q), inv_mod_prime(m_mod, q), q);
  if (t != 0) mpz_addmul_ui(value_.get_mpz_t(), modulus_.get_mpz_t(), t);
  modulus_ *= static_cast<unsigned long>(q);
  mpz_class twice = value_;
  twice *= 2;
  if (twice > modulus_) value_ -= modulus_;
  return t == 0;
}

}  // namespace periodeq
