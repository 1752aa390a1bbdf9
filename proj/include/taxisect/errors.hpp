#pragma once

#include <stdexcept>
#include <string>

namespace taxisect {

// Base of every error thrown by the kernel. Callers that only care about
// "something in the geometry went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Precondition violations on geometric inputs (coincident points, zero
// directions, n out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace taxisect
