#include "periodeq/monogeneity.hpp"

#include <string>

#include "periodeq/cyclotomic.hpp"
#include "periodeq/error.hpp"
#include "periodeq/period.hpp"
#include "periodeq/resultant.hpp"

namespace periodeq {

mpz_class FieldDiscriminant::value() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, exponent);
  if (sign < 0) out = -out;
  return out;
}

FieldDiscriminant field_discriminant(std::uint64_t e, std::uint64_t f, std::uint64_t p) {
  if (e == 0 || f == 0 || p != e * f + 1 || !is_prime(p)) {
    throw MathError(ErrorKind::InvalidContext,
                    "(e=" + std::to_string(e) + ", f=" + std::to_string(f) +
                        ", p=" + std::to_string(p) + ") is not a valid context");
  }
  const bool negative = (e - 1) % 4 == 1 && f % 2 == 1;
  return {negative ? -1 : 1, p, e - 1};
}

IndexSquare index_squared(const mpz_class& poly_discriminant, const FieldDiscriminant& delta) {
  if (poly_discriminant == 0) {
    throw MathError(ErrorKind::InvalidArgument, "discriminant is zero");
  }
  mpz_class q = poly_discriminant;
  for (std::uint64_t i = 0; i < delta.exponent; ++i) {
    if (!mpz_divisible_ui_p(q.get_mpz_t(), delta.p)) {
      throw MathError(ErrorKind::NotDivisible,
                      "D is not divisible by " + std::to_string(delta.p) + "^" +
                          std::to_string(delta.exponent) + " (only by power " +
                          std::to_string(i) + ")");
    }
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), delta.p);
  }
  if (delta.sign < 0) q = -q;
  if (q <= 0) {
    throw MathError(ErrorKind::NotPerfectSquare,
                    "D / delta = " + q.get_str() + " is not a positive square");
  }
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), q.get_mpz_t());
  if (k * k != q) {
    throw MathError(ErrorKind::NotPerfectSquare,
                    "D / delta = " + q.get_str() + " is not a perfect square");
  }
  return {q, k};
}

std::string_view to_string(MatchKind kind) noexcept {
  switch (kind) {
    case MatchKind::DirectCyclotomic: return "direct";
    case MatchKind::ReducedCyclotomic: return "reduced";
    case MatchKind::NoMatch: return "none";
  }
  return "none";
}

MatchKind parse_match_kind(std::string_view text) {
  if (text == "direct") return MatchKind::DirectCyclotomic;
  if (text == "reduced") return MatchKind::ReducedCyclotomic;
  if (text == "none") return MatchKind::NoMatch;
  throw MathError(ErrorKind::InvalidArgument,
                  "unknown match kind '" + std::string(text) + "'");
}

ClassificationRecord classify(const PrimeContext& ctx) {
  ClassificationRecord rec;
  rec.e = ctx.e;
  rec.f = ctx.f;
  rec.p = ctx.p;
  rec.g = ctx.g;
  rec.psi = period_polynomial_modular(ctx).poly;
  rec.poly_discriminant = discriminant(rec.psi);
  rec.field_discriminant = field_discriminant(ctx.e, ctx.f, ctx.p);
  auto [k_squared, k] = index_squared(rec.poly_discriminant, rec.field_discriminant);
  rec.k_squared = std::move(k_squared);
  rec.k = std::move(k);
  rec.monogenic = rec.k == 1;
  rec.signature = signature(rec.psi);

  if (ctx.f == 1 && rec.psi == cyclotomic_prime(ctx.p)) {
    rec.match_kind = MatchKind::DirectCyclotomic;
  } else if (ctx.p == 2 * ctx.e + 1 && demoivre_unfold(rec.psi) == cyclotomic_prime(ctx.p)) {
    rec.match_kind = MatchKind::ReducedCyclotomic;
  }
  return rec;
}

std::string validate(const ClassificationRecord& r) {
  if (r.p != r.e * r.f + 1) return "p != e*f+1";
  if (r.field_discriminant.p != r.p || r.field_discriminant.exponent + 1 != r.e) {
    return "field discriminant does not match (p, e)";
  }
  if (r.poly_discriminant != r.k_squared * r.field_discriminant.value()) {
    return "D != k^2 * delta";
  }
  if (r.k < 0 || r.k * r.k != r.k_squared) return "k^2 is not the square of k";
  if (r.monogenic != (r.k == 1)) return "monogenic flag disagrees with k";
  if (r.psi.degree() != r.e) return "psi has the wrong degree";
  if (r.signature.n_real + 2 * r.signature.n_complex_pairs != r.e) {
    return "signature does not add up to the degree";
  }
  switch (r.match_kind) {
    case MatchKind::DirectCyclotomic:
      if (r.f != 1 || r.psi != cyclotomic_prime(r.p)) return "direct match is unsound";
      break;
    case MatchKind::ReducedCyclotomic:
      if (r.f != 2 || demoivre_unfold(r.psi) != cyclotomic_prime(r.p)) {
        return "reduced match is unsound";
      }
      break;
    case MatchKind::NoMatch:
      break;
  }
  return {};
}

}  // namespace periodeq
