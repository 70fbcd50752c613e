#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonUnimodularRatio : std::domain_error {
  using std::domain_error::domain_error;
};

struct PoleAtDenominatorZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularConstraint : std::domain_error {
  using std::domain_error::domain_error;
};

struct NoUnimodularSolution : std::domain_error {
  using std::domain_error::domain_error;
};

struct LeakageExceedsTolerance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReconstructionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ybe
