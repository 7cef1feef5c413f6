#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zass {

// All coefficients, matrix entries and structure constants are complex doubles;
// real inputs are embedded with zero imaginary part.
using Scalar = std::complex<double>;

inline bool is_finite(Scalar z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// e^u = e^v with u != v: a genuine pole of the BCH coefficient.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Series index beyond the stored truncation order.
class OrderError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Requested dimension outside the supported range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Matrix exponential would leave double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Commutator vanishes, or the requested realization does not exist.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// No Pauli normalization reproduces the dissipator commutation relation.
class ConventionError : public Error {
 public:
  using Error::Error;
};

}  // namespace zass
