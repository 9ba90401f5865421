#include "dvnug/error.hpp"

namespace dvnug {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NonOdd: return "NonOdd";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FrequencyNotInLambda: return "FrequencyNotInLambda";
    case ErrorCode::NotAFrameSuspected: return "NotAFrameSuspected";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace dvnug
