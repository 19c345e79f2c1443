#pragma once

#include <stdexcept>
#include <string>

namespace sullivan {

/// Caller passed something the operation does not accept (bad names,
/// mismatched signatures, wrong parity). Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the documented numeric range. Also exit code 2.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Structurally well-formed input that violates a mathematical invariant
/// (d^2 != 0, Jacobi, inhomogeneous differential).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that should be guaranteed upstream did not hold. Maps to
/// CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sullivan
