#pragma once

#include <stdexcept>
#include <string>

namespace mocklab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Working precision cannot resolve the requested point.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature failed to meet its stopping rule.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An integration contour gets too close to a pole of the integrand.
class PoleProximityError : public Error {
 public:
  using Error::Error;
};

/// Lateral values do not approach the prediction along the epsilon sequence.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mocklab
