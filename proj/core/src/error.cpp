#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::WholeLine: return "WholeLine";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::ProportionTooLarge: return "ProportionTooLarge";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NoDelta: return "NoDelta";
    case ErrorCode::SymmetricInput: return "SymmetricInput";
    case ErrorCode::NotThreeGenerated: return "NotThreeGenerated";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace numsg
