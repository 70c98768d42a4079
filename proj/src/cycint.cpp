#include "periodeq/cycint.hpp"

#include <string>
#include <utility>

#include "periodeq/error.hpp"

namespace periodeq {

namespace {

void check_same(const CycInt& a, const CycInt& b) {
  if (a.prime() != b.prime()) {
    throw MathError(ErrorKind::MismatchedP,
                    "cyclotomic integers over different primes " +
                        std::to_string(a.prime()) + " and " +
                        std::to_string(b.prime()));
  }
}

}  // namespace

CycInt::CycInt(std::uint64_t p) : p_(p), coeffs_(p - 1) {}

CycInt CycInt::from_integer(std::uint64_t p, const mpz_class& n) {
  CycInt out(p);
  out.coeffs_[0] = n;
  return out;
}

CycInt CycInt::zeta_power(std::uint64_t p, std::uint64_t k) {
  std::vector<mpz_class> cyclic(p);
  cyclic[k % p] = 1;
  return from_cyclic(p, std::move(cyclic));
}

CycInt CycInt::from_cyclic(std::uint64_t p, std::vector<mpz_class> cyclic) {
  CycInt out(p);
  const mpz_class top = cyclic[p - 1];
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    out.coeffs_[i] = std::move(cyclic[i]);
    if (top != 0) out.coeffs_[i] -= top;
  }
  return out;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<mpz_class> CycInt::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  check_same(a, b);
  CycInt out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  check_same(a, b);
  CycInt out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  check_same(a, b);
  const std::uint64_t p = a.p_;
  std::vector<mpz_class> cyclic(p);
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::uint64_t k = i + j;
      if (k >= p) k -= p;
      mpz_addmul(cyclic[k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return CycInt::from_cyclic(p, std::move(cyclic));
}

CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }

}  // namespace periodeq
