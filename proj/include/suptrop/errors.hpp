#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suptrop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its domain (inverting zero, i = j for a
/// Gaussian generator, enumeration bound exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch or out-of-range index.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a nonsingular (tangible determinant) matrix.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A constructive witness could not be produced for the given input.
class WitnessError : public Error {
 public:
  using Error::Error;
};

/// A self-check on a constructed result failed. Always a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace suptrop
