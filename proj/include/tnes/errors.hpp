#pragma once

#include <stdexcept>
#include <string>

namespace tnes {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quantile requested at probability 0 or 1.
class InfiniteQuantileError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A TnParams value that violates sigma > 0, tau_l < tau_u or finiteness.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller broke a structural precondition (e.g. unsorted order statistics).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Sample cannot support an estimate (all values identical, class too small).
class DegenerateSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative numerical routine stopped short of its tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Internal invariant that the mathematics guarantees was violated anyway.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tnes
