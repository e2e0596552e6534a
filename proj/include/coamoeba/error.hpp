#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coamoeba {

/// Failure kinds raised by the library. The category of a code decides the
/// CLI exit status (validation 1, mathematical degeneracy 2, numerical
/// indeterminacy 3).
enum class ErrorCode {
  // validation
  InvalidInput,
  WrongCardinality,
  NotFullDimensional,
  // mathematical degeneracy
  DegenerateCircuit,
  NonUnimodularKernelBasis,
  DegenerateEdgePolynomial,
  DegenerateInput,
  SingularExponentMatrix,
  EmptyCurve,
  IdenticallyZeroResultant,
  NotInComplement,
  AntipodalDegenerate,
  NotSpecialOrthogonalForm,
  SingularElimination,
  NoAdmissibleChoice,
  NonGenericSystem,
  // numerical
  NumericallyIndeterminate,
};

enum class ErrorCategory { Validation, Degeneracy, Numerical };

constexpr ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::WrongCardinality:
    case ErrorCode::NotFullDimensional:
      return ErrorCategory::Validation;
    case ErrorCode::NumericallyIndeterminate:
      return ErrorCategory::Numerical;
    default:
      return ErrorCategory::Degeneracy;
  }
}

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace coamoeba
