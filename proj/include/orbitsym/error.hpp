#ifndef ORBITSYM_ERROR_HPP
#define ORBITSYM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitsym {

enum class ErrorCode {
  NonAssociative,
  NoIdentity,
  NoInverse,
  BadParameter,
  SizeLimit,
  DimensionMismatch,
  BadGaloisExponent,
  ValidationFailure,
  GroupMismatch,
  NotIrreducible,
  NotACharacter,
  NotCyclicModuleCharacter,
  SearchBudgetExceeded,
  NotAGenericSymmetry,
  NotAbelian,
  NotGenerating,
  RelationViolated,
  Singular,
  NotRationalIdealCharacter,
  NotSpanning,
  NotCyclic,
  PersistentMismatch,
  BadWitnessData,
  SchemaError,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures are reported through this exception type; `code()`
/// identifies the failure class named in the public contracts.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Input errors map to CLI exit code 2, mathematical failures to 1.
  bool is_input_error() const noexcept;

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

} // namespace orbitsym

#endif // ORBITSYM_ERROR_HPP
