#pragma once

#include <stdexcept>
#include <string>

namespace cosserat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed or inconsistent scenario / input data
struct ConfigError : Error {
  using Error::Error;
};

// geometry outside the admissible range (degenerate charts, shell too thick)
struct DomainError : Error {
  using Error::Error;
};

// violated numerical preconditions and failed iterations
struct NumericalError : Error {
  using Error::Error;
};

struct DegenerateParametrization final : DomainError {
  using DomainError::DomainError;
};

struct ThicknessExceedsCurvature final : DomainError {
  using DomainError::DomainError;
};

struct NotSkew final : NumericalError {
  using NumericalError::NumericalError;
};

struct Singular final : NumericalError {
  using NumericalError::NumericalError;
};

struct InconsistentRotationDerivative final : NumericalError {
  using NumericalError::NumericalError;
};

struct StructureViolation final : NumericalError {
  using NumericalError::NumericalError;
};

struct LineSearchFailure final : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace cosserat
