#include "hpss/error.hpp"

namespace hpss {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::NotPoisson: return "NotPoisson";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::BadJ: return "BadJ";
    case ErrorCode::JacobiFailure: return "JacobiFailure";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotE2Class: return "NotE2Class";
    case ErrorCode::SquareZeroViolation: return "SquareZeroViolation";
    case ErrorCode::ChainMapViolation: return "ChainMapViolation";
    case ErrorCode::NoneFound: return "NoneFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace hpss
