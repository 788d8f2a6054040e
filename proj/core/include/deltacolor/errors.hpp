#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltacolor {

enum class ErrorCode {
  kNotNice,
  kBadPartial,
  kRoundLimitExceeded,
  kParamUnsupported,
  kListTooSmall,
  kLayerListViolation,
  kComponentTooLarge,
  kTooLarge,
  kInfeasibleFamily,
  kRejectionBudgetExceeded,
  kNotABlock,
  kInvalidGraph,
  kParse,
  kIo,
  kInternal,
};

std::string_view error_name(ErrorCode code);

// All library failures surface as this exception; `code()` names the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace deltacolor
