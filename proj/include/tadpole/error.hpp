#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tadpole {

enum class ErrorKind {
  InvalidArgument,
  MalformedLine,
  DuplicateEdge,
  SelfLoop,
  Disconnected,
  NonPositiveWeight,
  NotATadpole,
  NotACycle,
  UnknownStartVertex,
  IllegalMove,
  Unreachable,
  IncompleteTour,
  AuditViolation,
  TooLarge,
  NonterminatingExplorer,
  AccountingMismatch,
  AdviceMismatch,
  Io,
};

const char* to_string(ErrorKind kind);

/// Every failure in the library surfaces as this exception; `kind()` tells
/// callers (and tests) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure tied to a 1-based line of the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tadpole
