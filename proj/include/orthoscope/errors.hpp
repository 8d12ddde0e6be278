#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthoscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition on an algebraic operation (zero input, modulus
/// mismatch, non-squarefree denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `offset` is the 0-based byte position of the
/// offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The input parsed, but its shape does not fit the requested command, or a
/// hypothesis of a criterion fails (line not invariant, f(x,0) = 0, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A witness failed its verification identity. Must never happen.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthoscope
