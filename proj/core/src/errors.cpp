#include "deltacolor/errors.hpp"

namespace deltacolor {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotNice: return "NotNice";
    case ErrorCode::kBadPartial: return "BadPartial";
    case ErrorCode::kRoundLimitExceeded: return "RoundLimitExceeded";
    case ErrorCode::kParamUnsupported: return "ParamUnsupported";
    case ErrorCode::kListTooSmall: return "ListTooSmall";
    case ErrorCode::kLayerListViolation: return "LayerListViolation";
    case ErrorCode::kComponentTooLarge: return "ComponentTooLarge";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasibleFamily: return "InfeasibleFamily";
    case ErrorCode::kRejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::kNotABlock: return "NotABlock";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace deltacolor
