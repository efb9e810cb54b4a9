#pragma once

#include <stdexcept>
#include <string>

namespace persym {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series coefficient beyond the known precision was requested.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured domain budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A coset integral was handed values that do not cover every representative.
class IncompleteDomain : public Error {
 public:
  using Error::Error;
};

// An exact computation that must produce an integer left a remainder.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

// A printed closed-form case table disagrees with the recurrence it should match.
class CaseMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed literal, key or checkpoint line.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace persym
