#pragma once

#include <stdexcept>
#include <string>

namespace macpoly {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different ambient variable counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed argument (wrong sum, too many parts, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Diagram/filling does not have the required shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A rational function that should be a polynomial is not.
class NotIntegralError : public Error {
 public:
  using Error::Error;
};

// Substitution hits a vanishing denominator or leaves a proper fraction.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Two routes to the same object disagree, or an internal invariant failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace macpoly
