#include "dirset/error.hpp"

namespace dirset {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonDivisor: return "NonDivisor";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ZeroInR: return "ZeroInR";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dirset
