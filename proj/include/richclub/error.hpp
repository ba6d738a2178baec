#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace richclub {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input data: unreadable files, malformed lines, label mismatches.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : InputError((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " +
                   detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Self-loop or duplicate edge in the input.
class EdgeError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed input that fails a structural requirement.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Graph too small for the requested operation (e.g. fewer than two edges to swap).
class DegenerateGraphError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A ratio or density whose denominator is zero.
class UndefinedError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace richclub
