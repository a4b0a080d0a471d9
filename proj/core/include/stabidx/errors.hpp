#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stabidx {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateArc,
  DimensionMismatch,
  BudgetExceeded,
  ParameterOutOfRange,
  Unrealizable,
  ShrinkNotAllowed,
  NotCoprime,
  NotAchievable,
  SearchExhausted,
  CodeOutOfRange,
  CeilingExceeded,
  OrderMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input-format error; `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stabidx
