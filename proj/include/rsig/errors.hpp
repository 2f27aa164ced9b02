#pragma once

#include <stdexcept>
#include <string>

namespace rsig {

// Base class for all domain errors raised by this library. The CLI maps
// these to exit code 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter tuple failed validation (reports the violated inequality).
class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

// Requested parameters cannot be realized (e.g. solved K outside [s, P],
// or solved t above 1).
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of a formula (e.g. ln ln n needs
// n >= 3, or a non-positive scaling numerator).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Coupled sampling called with marginals that admit no monotone coupling.
class CouplingMismatch : public Error {
 public:
  using Error::Error;
};

// Projected work exceeds the configured cap; raised before the work starts.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

// The lower coupling bound t*P - sqrt(3 ln n (ln n + t*P)) is not positive.
class NegativeLowerBound : public Error {
 public:
  using Error::Error;
};

// Brute-force oracle called on a graph above its hard size limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// The chain kappa_v <= kappa_e <= delta failed; indicates an algorithm bug,
// never a property of the input.
class InternalOrderViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rsig
