#pragma once

#include <stdexcept>
#include <string>

namespace legopt {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A segment dimension violates its invariants (l,w,h > 0, 0 < t <= min(w,h)/2).
class InvalidDimensionsError : public Error {
 public:
  using Error::Error;
};

/// No wall thickness in (0, min(w,h)/2] reproduces the requested mass.
class CalibrationInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Non-positive segment duration passed to the quintic solver.
class InvalidDurationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation time outside [0, duration].
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs samples received none.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Torque trace and trajectory do not share the same time grid.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Inertia matrix not positive definite at some pose.
class SingularInertiaError : public Error {
 public:
  using Error::Error;
};

/// Forward integration diverged (joint rates beyond the stability guard).
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace legopt
