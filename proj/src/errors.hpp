#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace signumcalc {

enum class ErrorCode {
  DivisionByZero,
  PoleAtDimension,
  UnsupportedAction,
  DomainError,
  KindMismatch,
  SpaceMismatch,
  UnknownSuite,
  ParseError,
  ArityError,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in an expression or polynomial string. `offset` is the byte
/// position at which the parser stopped; `expected` lists the tokens that
/// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& message, ErrorCode code = ErrorCode::ParseError);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A term without `delta`, with two of them, or with an operator to the right
/// of `delta`.
class ArityError : public ParseError {
 public:
  ArityError(std::size_t offset, const std::string& message)
      : ParseError(offset, {}, message, ErrorCode::ArityError) {}
};

}  // namespace signumcalc
