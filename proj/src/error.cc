#include "commbench/error.h"

namespace commbench {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidColor: return "InvalidColor";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyRect: return "EmptyRect";
    case ErrorCode::kEmptyCellSet: return "EmptyCellSet";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kNotAProduct: return "NotAProduct";
    case ErrorCode::kNotTotal: return "NotTotal";
    case ErrorCode::kUncoverable: return "Uncoverable";
    case ErrorCode::kNoProtocol: return "NoProtocol";
    case ErrorCode::kInvalidDelta: return "InvalidDelta";
    case ErrorCode::kInvalidRho: return "InvalidRho";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kInvalidMeasure: return "InvalidMeasure";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace commbench
