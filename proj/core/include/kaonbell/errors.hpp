#pragma once

#include <stdexcept>
#include <string>

namespace kaonbell {

/// A time, velocity, angle or constant outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Detection times supplied in the wrong order (the pair table needs tau1 <= tau2).
class OrderingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A local-realistic model, or a delta offset, that leaves the feasible region.
/// `what()` names the violated interval.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kaonbell
