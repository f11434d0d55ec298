#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptriv {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d_{j} composed with d_{j+1} is nonzero, or a boundary shape is wrong.
// `degree` is the upper degree of the first failing square.
class NotAComplexError : public Error {
 public:
  NotAComplexError(int degree, const std::string& what)
      : Error(what), degree(degree) {}
  int degree;
};

// Suspension/wedge input lacks a single basepoint cell in degree 0.
class NotBasedError : public Error {
 public:
  using Error::Error;
};

// Requested subquotient where the would-be denominator is not contained
// in the numerator subgroup.
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

// Integral Bockstein lift produced an odd coboundary entry.  Cannot happen
// for genuine chain complexes; kept as a loud failure instead of UB.
class LiftFailure : public Error {
 public:
  using Error::Error;
};

// Space parameters outside the documented ranges.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// No closed-form formula implemented for this space family.
class UnsupportedSpecError : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside the documented domain (phi with n > m, bad modulus).
class BadRangeError : public Error {
 public:
  using Error::Error;
};

// Space grammar syntax error; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what), position(position) {}
  std::size_t position;
};

}  // namespace ptriv
