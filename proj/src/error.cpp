#include "lcseq/error.hpp"

namespace lcseq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegreeExceedsOrder: return "DegreeExceedsOrder";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateSet: return "DegenerateSet";
    case ErrorCode::DecodeFailure: return "DecodeFailure";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::BadRegime: return "BadRegime";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::DuplicateX: return "DuplicateX";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lcseq
