#include "periodeq/sturm.hpp"

#include <string>

#include "periodeq/error.hpp"

namespace periodeq {

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  IntPoly d = derivative(p);
  if (d.is_zero()) return seq;
  seq.push_back(std::move(d));
  for (;;) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem scales by lc(b)^(delta+1); undo a negative factor, then negate.
    const std::size_t delta = *a.degree() - *b.degree();
    const bool negative_scale = b.leading() < 0 && delta % 2 == 0;
    mpz_class c = r.content();
    if (!negative_scale) c = -c;
    seq.push_back(r.divexact(c));
  }
  return seq;
}

std::size_t variations_at_plus_infinity(const std::vector<IntPoly>& seq) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& s : seq) signs.push_back(sgn(s.leading()));
  return count_variations(signs);
}

std::size_t variations_at_minus_infinity(const std::vector<IntPoly>& seq) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& s : seq) {
    const int lead = sgn(s.leading());
    signs.push_back(*s.degree() % 2 == 0 ? lead : -lead);
  }
  return count_variations(signs);
}

Signature signature(const IntPoly& p) {
  if (p.is_zero() || *p.degree() == 0) {
    throw MathError(ErrorKind::InvalidArgument,
                    "signature needs a polynomial of degree >= 1");
  }
  const std::vector<IntPoly> seq = sturm_sequence(p);
  if (*seq.back().degree() != 0) {
    throw MathError(ErrorKind::NotSquarefree,
                    "polynomial is not squarefree: gcd(P, P') has degree " +
                        std::to_string(*seq.back().degree()));
  }
  const std::size_t n = *p.degree();
  const std::size_t real =
      variations_at_minus_infinity(seq) - variations_at_plus_infinity(seq);
  return {real, (n - real) / 2};
}

bool is_squarefree(const IntPoly& p) {
  if (p.is_zero()) return false;
  if (*p.degree() == 0) return true;
  return *sturm_sequence(p).back().degree() == 0;
}

}  // namespace periodeq
