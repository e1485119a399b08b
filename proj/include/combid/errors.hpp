#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combid {

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of an operation (negative row of an
// integer binomial, non-integer lower index, negative kernel exponent, ...).
struct DomainError : Error {
  using Error::Error;
};

// A denominator vanished: a binomial under ^-1 is zero, or a quotient has a
// zero divisor. Signals a binding excluded by the identity's hypotheses.
struct PoleError : Error {
  using Error::Error;
};

struct UnboundParameter : Error {
  explicit UnboundParameter(const std::string& name)
      : Error("unbound parameter '" + name + "'"), name(name) {}
  std::string name;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct ArityError : SyntaxError {
  using SyntaxError::SyntaxError;
};

// A descriptor does not have the shape a transform requires.
struct ShapeError : Error {
  using Error::Error;
};

struct UnknownEntry : Error {
  explicit UnknownEntry(const std::string& id) : Error("unknown catalog entry '" + id + "'") {}
};

struct EmptyGrid : Error {
  using Error::Error;
};

struct NonIntegerExponent : Error {
  using Error::Error;
};

struct SingularExponent : Error {
  using Error::Error;
};

}  // namespace combid
