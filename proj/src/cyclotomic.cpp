#include "periodeq/cyclotomic.hpp"

#include <string>
#include <utility>
#include <vector>

#include "periodeq/error.hpp"
#include "periodeq/number_theory.hpp"

namespace periodeq {

IntPoly cyclotomic_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw MathError(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }
  return IntPoly(std::vector<mpz_class>(p, mpz_class(1)));
}

bool is_self_reciprocal(const IntPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0, j = c.size(); i < j--; ++i) {
    if (c[i] != c[j]) return false;
  }
  return true;
}

IntPoly demoivre_reduce(const IntPoly& p) {
  if (p.is_zero()) {
    throw MathError(ErrorKind::InvalidArgument, "cannot reduce the zero polynomial");
  }
  const std::size_t n = *p.degree();
  if (n % 2 != 0) {
    throw MathError(ErrorKind::OddDegree,
                    "de Moivre reduction needs even degree, got " + std::to_string(n));
  }
  if (!is_self_reciprocal(p)) {
    throw MathError(ErrorKind::NotSelfReciprocal, "polynomial is not self-reciprocal");
  }
  const std::size_t e = n / 2;
  const auto& a = p.coeffs();

  // x^k + x^-k = V_k(x + 1/x); V_0 = 2, V_1 = z, V_{k+1} = z V_k - V_{k-1}.
  std::vector<mpz_class> out(e + 1);
  out[0] = a[e];
  std::vector<mpz_class> prev{2};
  std::vector<mpz_class> cur{0, 1};
  for (std::size_t k = 1; k <= e; ++k) {
    const mpz_class& w = a[e + k];
    if (w != 0) {
      for (std::size_t i = 0; i < cur.size(); ++i) {
        mpz_addmul(out[i].get_mpz_t(), w.get_mpz_t(), cur[i].get_mpz_t());
      }
    }
    std::vector<mpz_class> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return IntPoly(std::move(out));
}

IntPoly demoivre_unfold(const IntPoly& r) {
  if (r.is_zero() || *r.degree() == 0) {
    throw MathError(ErrorKind::InvalidArgument,
                    "de Moivre unfolding needs degree >= 1");
  }
  const std::size_t e = *r.degree();
  std::vector<mpz_class> out(2 * e + 1);
  // x^e * (x + 1/x)^j = x^(e-j) * (1 + x^2)^j
  std::vector<mpz_class> binom{1};
  for (std::size_t j = 0; j <= e; ++j) {
    const mpz_class& c = r.coeff(j);
    if (c != 0) {
      for (std::size_t i = 0; i <= j; ++i) {
        mpz_addmul(out[e - j + 2 * i].get_mpz_t(), c.get_mpz_t(), binom[i].get_mpz_t());
      }
    }
    binom.emplace_back(0);
    for (std::size_t i = binom.size() - 1; i > 0; --i) binom[i] += binom[i - 1];
  }
  return IntPoly(std::move(out));
}

}  // namespace periodeq
