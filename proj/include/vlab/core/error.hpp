#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

// Data conditions a caller can trigger with bad input.
class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonIntegerCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotFullDimensional : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal identities. Seeing one of these means a bug, not bad data.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InternalNonInteger : public InternalError {
 public:
  using InternalError::InternalError;
};

class InternalRemainder : public InternalError {
 public:
  using InternalError::InternalError;
};

class NegativeDelta : public InternalError {
 public:
  using InternalError::InternalError;
};

class InvariantViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace vlab
