#ifndef PERIODEQ_INTPOLY_HPP
#define PERIODEQ_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace periodeq {

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
/// the top stored coefficient is never zero, so the zero polynomial is the
/// empty vector and has no degree (degree() returns nullopt).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending);

  /// Coefficients listed from x^0 upward: {-1, 0, 1} is x^2 - 1.
  static IntPoly from_ascending(std::initializer_list<long> coeffs);
  /// Coefficients listed from the top degree down, as printed in tables.
  static IntPoly from_descending(const std::vector<mpz_class>& coeffs);
  static IntPoly constant(mpz_class c);
  static IntPoly monomial(mpz_class c, std::size_t k);

  /// Parses strings such as "x^3-x^2-2x-8" or "x^5+x^4-4*x^3+1". Spaces and
  /// '*' are ignored. Throws MathError(InvalidArgument) on malformed input.
  static IntPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;

  /// Coefficient of x^i, zero past the top.
  const mpz_class& coeff(std::size_t i) const noexcept;
  /// Leading coefficient; throws InvalidArgument on the zero polynomial.
  const mpz_class& leading() const;

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  std::vector<mpz_class> coeffs_descending() const;

  /// Positive gcd of the coefficients, 0 for the zero polynomial.
  mpz_class content() const;
  IntPoly primitive_part() const;
  /// Divides every coefficient by d, which must divide all of them.
  IntPoly divexact(const mpz_class& d) const;

  mpz_class evaluate(const mpz_class& x) const;

  /// Descending powers with explicit signs: x^5+x^4-4x^3-3x^2+3x+1.
  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

IntPoly derivative(const IntPoly& p);

/// lc(b)^(deg a - deg b + 1) * a  mod b. b must be nonzero.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace periodeq

#endif  // PERIODEQ_INTPOLY_HPP
