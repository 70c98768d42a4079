#include "periodeq/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "periodeq/error.hpp"

namespace periodeq {

namespace {

const mpz_class& zero_coeff() {
  static const mpz_class kZero = 0;
  return kZero;
}

[[noreturn]] void parse_error(std::string_view text, const char* why) {
  throw MathError(ErrorKind::InvalidArgument,
                  "cannot parse polynomial '" + std::string(text) + "': " + why);
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> ascending)
    : coeffs_(std::move(ascending)) {
  normalize();
}

IntPoly IntPoly::from_ascending(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::from_descending(const std::vector<mpz_class>& coeffs) {
  return IntPoly(std::vector<mpz_class>(coeffs.rbegin(), coeffs.rend()));
}

IntPoly IntPoly::constant(mpz_class c) {
  return IntPoly(std::vector<mpz_class>{std::move(c)});
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  }
  if (s.empty()) parse_error(text, "empty");

  std::vector<mpz_class> c;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      parse_error(text, "expected '+' or '-' between terms");
    }
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    mpz_class coef = 1;
    const bool has_digits = i > digits_start;
    if (has_digits) coef = mpz_class(s.substr(digits_start, i - digits_start));
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t exp_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == exp_start) parse_error(text, "missing exponent");
        power = std::stoul(s.substr(exp_start, i - exp_start));
      }
    } else if (!has_digits) {
      parse_error(text, "term without coefficient or x");
    }
    if (c.size() <= power) c.resize(power + 1);
    c[power] += sign * coef;
  }
  return IntPoly(std::move(c));
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const mpz_class& IntPoly::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : zero_coeff();
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) {
    throw MathError(ErrorKind::InvalidArgument,
                    "zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

std::vector<mpz_class> IntPoly::coeffs_descending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (coeffs_.back() < 0) g = -g;
  return divexact(g);
}

IntPoly IntPoly::divexact(const mpz_class& d) const {
  IntPoly out = *this;
  if (d == 1) return out;
  for (auto& c : out.coeffs_) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const mpz_class mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly derivative(const IntPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<mpz_class> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) {
    throw MathError(ErrorKind::InvalidArgument, "pseudo-division by zero");
  }
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) return a;

  const auto& bc = b.coeffs();
  const std::size_t nb = bc.size();
  const mpz_class& lb = bc.back();
  std::vector<mpz_class> r = a.coeffs();
  const std::size_t delta = r.size() - nb;
  std::size_t steps = 0;
  mpz_class lead;
  // Each step scales r by lc(b) and cancels its top coefficient.
  while (r.size() >= nb) {
    lead = r.back();
    const std::size_t shift = r.size() - nb;
    r.pop_back();
    for (auto& x : r) x *= lb;
    if (lead != 0) {
      for (std::size_t j = 0; j + 1 < nb; ++j) {
        mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
      }
    }
    ++steps;
    while (!r.empty() && r.back() == 0 && r.size() >= nb) {
      // A vanished top term still consumes one factor of lc(b).
      r.pop_back();
      for (auto& x : r) x *= lb;
      ++steps;
    }
  }
  IntPoly out(std::move(r));
  if (steps < delta + 1) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), delta + 1 - steps);
    out *= scale;
  }
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.coeffs().size() < y.coeffs().size()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace periodeq
