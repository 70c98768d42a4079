#ifndef PERIODEQ_CRT_HPP
#define PERIODEQ_CRT_HPP

#include <gmpxx.h>

#include <cstdint>

namespace periodeq {

/// Incremental Chinese remaindering into the symmetric range (-M/2, M/2]
/// for pairwise distinct word-size prime moduli.
class SymmetricCrt {
 public:
  /// Folds in x = residue (mod q). Returns true when the reconstructed value
  /// did not change.
  bool add(std::uint64_t residue, std::uint64_t q);

  bool agrees(std::uint64_t residue, std::uint64_t q) const {
    return mpz_fdiv_ui(value_.get_mpz_t(), q) == residue;
  }

  const mpz_class& value() const noexcept { return value_; }
  const mpz_class& modulus() const noexcept { return modulus_; }

 private:
  mpz_class value_ = 0;
  mpz_class modulus_ = 1;
};

}  // namespace periodeq

#endif  // PERIODEQ_CRT_HPP
