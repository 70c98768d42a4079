#ifndef PERIODEQ_ERROR_HPP
#define PERIODEQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodeq {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  CompositeP,
  IndexOutOfRange,
  MismatchedP,
  NotSquarefree,
  NotSelfReciprocal,
  OddDegree,
  InvalidContext,
  // The kinds below can only be raised by a computation bug or by a
  // contradiction of the discriminant formula; callers surface them loudly.
  NonIntegerCoefficient,
  NotDivisible,
  NotPerfectSquare,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for the kinds that signal an internal mathematical contradiction
// rather than bad input.
constexpr bool is_contradiction(ErrorKind kind) noexcept {
  return kind == ErrorKind::NonIntegerCoefficient ||
         kind == ErrorKind::NotDivisible ||
         kind == ErrorKind::NotPerfectSquare ||
         kind == ErrorKind::InvariantViolation;
}

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace periodeq

#endif  // PERIODEQ_ERROR_HPP
