#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside an operation's domain (division by zero, n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input: files, command-line values, textual formats.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in formula text. `position` is the 1-based column at which
/// parsing failed; one past the last character means "unexpected end".
class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("syntax error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace omega
