#include "orbitsym/error.hpp"

namespace orbitsym {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::NonAssociative: return "NonAssociative";
  case ErrorCode::NoIdentity: return "NoIdentity";
  case ErrorCode::NoInverse: return "NoInverse";
  case ErrorCode::BadParameter: return "BadParameter";
  case ErrorCode::SizeLimit: return "SizeLimit";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::BadGaloisExponent: return "BadGaloisExponent";
  case ErrorCode::ValidationFailure: return "ValidationFailure";
  case ErrorCode::GroupMismatch: return "GroupMismatch";
  case ErrorCode::NotIrreducible: return "NotIrreducible";
  case ErrorCode::NotACharacter: return "NotACharacter";
  case ErrorCode::NotCyclicModuleCharacter: return "NotCyclicModuleCharacter";
  case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
  case ErrorCode::NotAGenericSymmetry: return "NotAGenericSymmetry";
  case ErrorCode::NotAbelian: return "NotAbelian";
  case ErrorCode::NotGenerating: return "NotGenerating";
  case ErrorCode::RelationViolated: return "RelationViolated";
  case ErrorCode::Singular: return "Singular";
  case ErrorCode::NotRationalIdealCharacter: return "NotRationalIdealCharacter";
  case ErrorCode::NotSpanning: return "NotSpanning";
  case ErrorCode::NotCyclic: return "NotCyclic";
  case ErrorCode::PersistentMismatch: return "PersistentMismatch";
  case ErrorCode::BadWitnessData: return "BadWitnessData";
  case ErrorCode::SchemaError: return "SchemaError";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool Error::is_input_error() const noexcept {
  switch (code_) {
  case ErrorCode::PersistentMismatch:
  case ErrorCode::ValidationFailure:
  case ErrorCode::SearchBudgetExceeded:
    return false;
  default:
    return true;
  }
}

} // namespace orbitsym
