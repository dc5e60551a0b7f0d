#ifndef SCN_ERRORS_HPP
#define SCN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scn {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument lies outside the mathematical domain of an operation
/// (non-positive distance, negative rate, argument on the wrong side of a
/// singularity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The model or environment is infeasible as a whole, e.g. a path loss
/// exponent <= 2 on an unbounded segment makes the interference integral
/// diverge.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its tolerance. Carries the partial
/// estimate so callers can inspect how far the computation got.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double partial)
      : Error(what), partial_(partial) {}
  double partial_estimate() const { return partial_; }

 private:
  double partial_;
};

/// Misuse of a user-facing surface: malformed config file, empty sweep grid,
/// a model of the wrong shape passed to a specialized routine.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace scn

#endif  // SCN_ERRORS_HPP
