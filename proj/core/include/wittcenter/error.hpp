#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittcenter {

// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings (mismatched p, k, level, variables...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Exact division by p^j attempted on a value that is not divisible.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// An index, exponent or level outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Operation not available for this ring (e.g. ghost map over a torsion ring).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee failed to hold; always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wittcenter
