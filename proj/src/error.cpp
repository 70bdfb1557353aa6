#include "mindhash/error.hpp"

#include "mindhash/letter.hpp"

namespace mindhash {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidKey: return "InvalidKey";
    case ErrorCode::kEmptyChallenge: return "EmptyChallenge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIncompleteTable: return "IncompleteTable";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kNoConsistentKey: return "NoConsistentKey";
    case ErrorCode::kTrialClosed: return "TrialClosed";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Letter::Letter(char c) {
  if (!is_lower_letter(c)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("not a lowercase letter: '") + c + "'");
  }
  value_ = c;
}

}  // namespace mindhash
