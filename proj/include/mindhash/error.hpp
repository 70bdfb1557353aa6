#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mindhash {

enum class ErrorCode {
  kInvalidKey,
  kEmptyChallenge,
  kInvalidArgument,
  kIncompleteTable,
  kEmptyCorpus,
  kNoConsistentKey,
  kTrialClosed,
  kInvalidState,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All domain failures surface as this exception; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mindhash
