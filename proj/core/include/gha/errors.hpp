#pragma once

#include <stdexcept>
#include <string>

namespace gha {

// Every numerical failure raised by the library derives from NumericalError so
// that the CLI can map it onto a single exit code.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoPhysicalRoot : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PhaseUnavailable : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BudgetExceeded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace gha
