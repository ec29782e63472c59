#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset(offset) {}
  std::size_t offset;
};

struct UnknownVariable : Error {
  explicit UnknownVariable(const std::string& name) : Error("unknown variable '" + name + "'"), name(name) {}
  std::string name;
};

struct ArityMismatch : Error {
  using Error::Error;
};

// Raised when an operation needs a positive (or larger) degree than it got.
struct DegreeError : Error {
  using Error::Error;
};

// Precondition failure on a mathematical object: symbolic lambda where a
// value is required, point not on a curve, unsupported curve degree, ...
struct DomainError : Error {
  using Error::Error;
};

}  // namespace plab
