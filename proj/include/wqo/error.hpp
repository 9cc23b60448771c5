#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wqo {

enum class ErrorKind {
  InvalidElement,
  EmptyOrder,
  NotOmegaPlusForm,
  NotMonotone,
  HeightMismatch,
  InvalidTerm,
  ArityMismatch,
  InvalidQuasiOrder,
  MissingValue,
  InvalidNode,
  LengthMismatch,
  NotTriangleRelated,
  TooShort,
  HeightExhausted,
  WindowTooSmall,
  WindowTooLarge,
  NotDescending,
  AlreadyMinimal,
  UnsupportedLeafDescent,
  ParseError,
  CheckFailed,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based position inside the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::ParseError, message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wqo
