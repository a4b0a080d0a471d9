#include "stabidx/errors.hpp"

namespace stabidx {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotAchievable: return "NotAchievable";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorKind::CeilingExceeded: return "CeilingExceeded";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorKind::ParseError,
            line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace stabidx
