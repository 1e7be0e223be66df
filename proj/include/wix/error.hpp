#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wix {

enum class ErrorCode {
  kInvalidArgument,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kCycleDetected,
  kDisconnected,
  kInvalidDegreeSequence,
  kNotAPath,
  kBadParity,
  kIndexOutOfRange,
  kInvalidBranchSelection,
  kInvalidMove,
  kOverflow,
  kTooLarge,
  kParse,
  kInconsistent,
  kTheoremViolation,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as a wix::Error carrying a code, so
// callers (notably the CLI) can map categories onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wix
