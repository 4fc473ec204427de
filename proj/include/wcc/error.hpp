#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wcc {

enum class ErrorCode {
  kInvalidSpace,
  kParseError,
  kEmptySupport,
  kDuplicatePoint,
  kUnsupportedFormat,
  kIndexOutOfRange,
  kInvalidSymbol,
  kInvalidPermutation,
  kInvalidArgument,
  kInconsistentInput,
  kPointNotInSupport,
  kEnumerationTooLarge,
  kStateSpaceTooLarge,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  // Resource-guard refusals, as opposed to malformed input.
  bool is_guard() const noexcept {
    return code_ == ErrorCode::kEnumerationTooLarge ||
           code_ == ErrorCode::kStateSpaceTooLarge;
  }

 private:
  ErrorCode code_;
};

}  // namespace wcc
