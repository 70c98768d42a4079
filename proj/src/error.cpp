#include "periodeq/error.hpp"

namespace periodeq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::CompositeP: return "CompositeP";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MismatchedP: return "MismatchedP";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotSelfReciprocal: return "NotSelfReciprocal";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotPerfectSquare: return "NotPerfectSquare";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace periodeq
