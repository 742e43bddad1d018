#pragma once

#include <stdexcept>
#include <string>

namespace djkm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A denominator (or divisor) was zero.
struct ZeroDenominator : Error {
  using Error::Error;
};

/// Polynomial division left a nonzero remainder.
struct NotDivisible : Error {
  using Error::Error;
};

/// Antiderivative requested for a series with a z^-1 term, or with a
/// truncation bound that hides the z^-1 coefficient.
struct ExponentMinusOne : Error {
  using Error::Error;
};

/// A series coefficient at or beyond the trusted truncation order was read.
struct TruncationUnderflow : Error {
  using Error::Error;
};

/// An operation that needs a nonzero element received zero.
struct ZeroElement : Error {
  using Error::Error;
};

/// A family index outside {-4,-3,-2,-1}, or an operator family where a
/// different one is required.
struct WrongFamily : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// A parameter set violating its domain (c^2 = 1, r not in {0,1}, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

}  // namespace djkm
