#ifndef MOTIVIC_ERRORS_HPP
#define MOTIVIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace motivic {

enum class ErrorCode {
  Empty,
  GcdNotOne,
  NotASemigroup,
  NotAMember,
  BudgetExceeded,
  NotCoprime,
  BadRange,
  SchemaError,
  InvariantViolation,
  UncalibratedConvention,
  CapExceeded,
  NonPrime,
  Inconsistent,
  Underdetermined,
  UnknownSuite,
  ZeroDenominator,
  BadInput,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NotASemigroup: return "NotASemigroup";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UncalibratedConvention: return "UncalibratedConvention";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Domain error carrying a stable machine-readable name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace motivic

#endif  // MOTIVIC_ERRORS_HPP
