#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace logitprice {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the domain of the operation. `field()` names the
// offending input ("mu", "alpha", "x", ...).
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// An iteration hit its cap without meeting the stopping rule.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Empty or inverted bracket, grid, or range.
class InvalidRangeError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// A regression produced parameters outside the model's domain.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

class SearchFailureError : public Error {
 public:
  using Error::Error;
};

}  // namespace logitprice
