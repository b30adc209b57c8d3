#pragma once

#include <stdexcept>
#include <string>

namespace basindim {

/// Base class for numerical failures that a caller may want to recover from.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootFindingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class AsymptoticLimitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// |f(z)| fell below 1e-300 where a quotient by f(z) was required.
class ZeroValueError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TooFewSamplesError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace basindim
