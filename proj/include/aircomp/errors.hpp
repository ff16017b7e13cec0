#ifndef AIRCOMP_ERRORS_HPP
#define AIRCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aircomp {

/// A parameter lies outside the domain of the requested operation
/// (non-positive power limit, MSE limit <= 0, zero channel, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Instance and design (or signal vector) disagree on the number of sensors.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative solve did not reach its tolerance or lost its bracket.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aircomp

#endif  // AIRCOMP_ERRORS_HPP
