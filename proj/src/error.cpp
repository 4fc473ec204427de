#include "wcc/error.hpp"

namespace wcc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpace: return "InvalidSpace";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidSymbol: return "InvalidSymbol";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInconsistentInput: return "InconsistentInput";
    case ErrorCode::kPointNotInSupport: return "PointNotInSupport";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kStateSpaceTooLarge: return "StateSpaceTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace wcc
