#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commbench {

enum class ErrorCode {
  kInvalidColor,
  kInvalidArgument,
  kEmptyRect,
  kEmptyCellSet,
  kSizeCap,
  kNotAProduct,
  kNotTotal,
  kUncoverable,
  kNoProtocol,
  kInvalidDelta,
  kInvalidRho,
  kInvalidDistribution,
  kInvalidMeasure,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this type; `code()` lets the CLI
// map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace commbench
