#pragma once

#include <stdexcept>
#include <string>

namespace bandspec {

/// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a structural precondition (shape, symmetry, class
/// membership, schema). CLI maps these to exit code 1.
struct ValidationError : Error {
  using Error::Error;
};

/// Computation is structurally fine but numerically untrustworthy
/// (rank collapse, conditioning, step blowup). CLI maps these to exit 2.
struct NumericalError : Error {
  using Error::Error;
};

struct NotHermitianError : ValidationError {
  using ValidationError::ValidationError;
};
struct NotPSDError : ValidationError {
  using ValidationError::ValidationError;
};
struct NotPositiveDefiniteError : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatchError : ValidationError {
  using ValidationError::ValidationError;
};
struct NotInClassError : ValidationError {
  using ValidationError::ValidationError;
};
struct SchemaError : ValidationError {
  using ValidationError::ValidationError;
};

struct RankDeficientError : NumericalError {
  using NumericalError::NumericalError;
};
struct RankMismatchError : NumericalError {
  using NumericalError::NumericalError;
};
struct NotDefiniteError : NumericalError {
  using NumericalError::NumericalError;
};
struct SingularNormalizerError : NumericalError {
  using NumericalError::NumericalError;
};
struct ConditioningError : NumericalError {
  using NumericalError::NumericalError;
};
struct StepSizeError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace bandspec
