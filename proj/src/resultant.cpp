#include "periodeq/resultant.hpp"

#include <algorithm>
#include <utility>

#include "periodeq/crt.hpp"
#include "periodeq/error.hpp"
#include "periodeq/modarith.hpp"
#include "periodeq/word_primes.hpp"

namespace periodeq {

namespace {

std::size_t deg(const IntPoly& p) { return p.coeffs().size() - 1; }

void require_nonzero(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    throw MathError(ErrorKind::InvalidArgument,
                    "resultant of a zero polynomial is undefined");
  }
}

mpz_class pow(const mpz_class& base, std::size_t exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

void trim(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<std::uint64_t> reduce(const IntPoly& p, std::uint64_t q) {
  std::vector<std::uint64_t> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), q);
  }
  return out;
}

}  // namespace

std::uint64_t resultant_mod(std::vector<std::uint64_t> a,
                            std::vector<std::uint64_t> b, std::uint64_t q) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  std::uint64_t result = 1;
  if (a.size() < b.size()) {
    if ((a.size() - 1) % 2 == 1 && (b.size() - 1) % 2 == 1) result = q - result;
    std::swap(a, b);
  }
  for (;;) {
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    if (n == 0) return mul_mod(result, pow_mod(b[0], m, q), q);
    // a <- a mod b
    const std::uint64_t inv_lb = inv_mod_prime(b.back(), q);
    for (std::size_t i = m + 1; i-- > n;) {
      const std::uint64_t c = mul_mod(a[i], inv_lb, q);
      if (c == 0) continue;
      const std::size_t shift = i - n;
      for (std::size_t j = 0; j <= n; ++j) {
        a[shift + j] = sub_mod(a[shift + j], mul_mod(c, b[j], q), q);
      }
    }
    a.resize(n);
    trim(a);
    if (a.empty()) return 0;
    const std::size_t k = a.size() - 1;
    if (m % 2 == 1 && n % 2 == 1) result = result == 0 ? 0 : q - result;
    result = mul_mod(result, pow_mod(b.back(), m - k, q), q);
    std::swap(a, b);
  }
}

mpz_class resultant_subresultant(const IntPoly& p, const IntPoly& q) {
  require_nonzero(p, q);
  if (deg(p) == 0) return pow(p.leading(), deg(q));
  if (deg(q) == 0) return pow(q.leading(), deg(p));

  IntPoly a = p;
  IntPoly b = q;
  int sign = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -1;
  }
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  a = a.divexact(ca);
  b = b.divexact(cb);
  const mpz_class t = pow(ca, deg(b)) * pow(cb, deg(a));

  mpz_class g = 1;
  mpz_class h = 1;
  for (;;) {
    const std::size_t da = deg(a);
    const std::size_t db = deg(b);
    const std::size_t delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = r.divexact(g * pow(h, delta));
    g = a.leading();
    if (delta >= 1) {
      mpz_class num = pow(g, delta);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), pow(h, delta - 1).get_mpz_t());
    }
    if (deg(b) == 0) break;
  }
  const std::size_t da = deg(a);
  mpz_class num = pow(b.leading(), da);
  mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), pow(h, da - 1).get_mpz_t());
  mpz_class out = t * h;
  if (sign < 0) out = -out;
  return out;
}

mpz_class resultant_modular(const IntPoly& p, const IntPoly& q, int threads) {
  require_nonzero(p, q);
  if (deg(p) == 0) return pow(p.leading(), deg(q));
  if (deg(q) == 0) return pow(q.leading(), deg(p));
  threads = std::max(threads, 1);

  const std::size_t batch = std::max<std::size_t>(4, 2 * static_cast<std::size_t>(threads));
  SymmetricCrt acc;
  int stable = 0;
  int confirmed = 0;
  bool confirming = false;
  std::size_t prime_index = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> residues;
  for (;;) {
    primes.clear();
    while (primes.size() < batch) {
      const std::uint64_t prime = descending_word_prime(prime_index++);
      // Skip primes that drop a degree.
      if (mpz_fdiv_ui(p.leading().get_mpz_t(), prime) == 0 ||
          mpz_fdiv_ui(q.leading().get_mpz_t(), prime) == 0) {
        continue;
      }
      primes.push_back(prime);
    }
    residues.assign(primes.size(), 0);
    const long count = static_cast<long>(primes.size());
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
    for (long i = 0; i < count; ++i) {
      residues[i] = resultant_mod(reduce(p, primes[i]), reduce(q, primes[i]), primes[i]);
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (confirming) {
        if (acc.agrees(residues[i], primes[i])) {
          if (++confirmed == 2) return acc.value();
          continue;
        }
        confirming = false;
        stable = 0;
        acc.add(residues[i], primes[i]);
        continue;
      }
      stable = acc.add(residues[i], primes[i]) ? stable + 1 : 0;
      if (stable >= 3) {
        confirming = true;
        confirmed = 0;
      }
    }
  }
}

mpz_class resultant(const IntPoly& p, const IntPoly& q, ResultantEngine engine) {
  return engine == ResultantEngine::Subresultant ? resultant_subresultant(p, q)
                                                 : resultant_modular(p, q);
}

mpz_class discriminant(const IntPoly& p, ResultantEngine engine) {
  if (p.is_zero() || deg(p) == 0) {
    throw MathError(ErrorKind::InvalidArgument,
                    "discriminant needs a polynomial of degree >= 1");
  }
  const std::size_t n = deg(p);
  mpz_class res = resultant(p, derivative(p), engine);
  mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res;
}

}  // namespace periodeq
