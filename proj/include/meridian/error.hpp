#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meridian {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word contained a zero letter or referenced a generator out of range.
class MalformedWord : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the text formats, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Inputs are individually valid but do not fit together (strand counts,
/// character moduli, unknown path names, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The computation was asked of an object outside the supported mode, e.g.
/// a finite-torus sweep on a group with infinite abelianization.
class WrongMode : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (coset limit, search size, ...) was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

}  // namespace meridian
