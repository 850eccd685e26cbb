#pragma once

#include <stdexcept>
#include <string>

namespace fuzzvec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (dimension mismatch,
/// negative radius, empty input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The request is outside the exactness tier the library implements.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An iterative routine did not converge, or an internal postcondition
/// check failed. Never swallowed: a result is not returned in this case.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Input data describes an invalid object (not sublinear, not nested, ...).
/// `condition` names the violated condition, `witness` is a short
/// human-readable description of the offending data.
class ValidationError : public Error {
 public:
  ValidationError(std::string condition, const std::string& message, std::string witness = {})
      : Error(message), condition_(std::move(condition)), witness_(std::move(witness)) {}

  const std::string& condition() const { return condition_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string condition_;
  std::string witness_;
};

}  // namespace fuzzvec
