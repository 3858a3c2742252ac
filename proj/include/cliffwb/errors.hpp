#pragma once

#include <stdexcept>
#include <string>

namespace cliffwb {

// Base for every error thrown by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built against different algebra signatures.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// Inversion of a zero paravector, coincident kernel arguments, ...
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_term)
      : Error(what), last_term_(last_term) {}
  double last_term_magnitude() const noexcept { return last_term_; }

 private:
  double last_term_;
};

// Least-squares system without a unique solution.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffwb
