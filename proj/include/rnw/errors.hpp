#pragma once

#include <stdexcept>
#include <string>

namespace rnw {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Argument sits on a pole of the function (e.g. Gamma at 0, -1, -2, ...).
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// 2F1 called outside the documented parameter table, or a branch that
// cannot reach the requested tolerance.
struct UnsupportedParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSize : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A proven inequality fails on the grid. For certified masses this means a
// discretisation fault, not a counterexample.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rnw
