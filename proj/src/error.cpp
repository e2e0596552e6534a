#include "coamoeba/error.hpp"

namespace coamoeba {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DegenerateCircuit: return "DegenerateCircuit";
    case ErrorCode::NonUnimodularKernelBasis: return "NonUnimodularKernelBasis";
    case ErrorCode::DegenerateEdgePolynomial: return "DegenerateEdgePolynomial";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SingularExponentMatrix: return "SingularExponentMatrix";
    case ErrorCode::EmptyCurve: return "EmptyCurve";
    case ErrorCode::IdenticallyZeroResultant: return "IdenticallyZeroResultant";
    case ErrorCode::NotInComplement: return "NotInComplement";
    case ErrorCode::AntipodalDegenerate: return "AntipodalDegenerate";
    case ErrorCode::NotSpecialOrthogonalForm: return "NotSpecialOrthogonalForm";
    case ErrorCode::SingularElimination: return "SingularElimination";
    case ErrorCode::NoAdmissibleChoice: return "NoAdmissibleChoice";
    case ErrorCode::NonGenericSystem: return "NonGenericSystem";
    case ErrorCode::NumericallyIndeterminate: return "NumericallyIndeterminate";
  }
  return "Unknown";
}

}  // namespace coamoeba
