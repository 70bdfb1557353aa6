#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mindhash/keys.hpp"

namespace mindhash::analysis {

enum class HumStepKind { kRetrieve, kOutput, kShift };

std::string_view to_string(HumStepKind kind);

// One elementary mental operation; cost counts writes to working memory.
struct HumStep {
  HumStepKind kind;
  int cost = 1;
};

struct HumTrace {
  std::vector<HumStep> steps;
  int total = 0;
};

// Mental generation trace for a challenge of n letters and a special string of
// special_len characters:
//
//   retrieve challenge, pointer -> c1                       1
//   per challenge letter: output mapped letter, shift       2n
//   retrieve special string, pointer -> s1                  1  (only if special_len > 0)
//   per special character: output; shift to the next one   2|s| - 1
//
// The pointer reaching the end of the special string is the stop condition and
// is not a write, so total = 2n + 2|s| + 1 for every (n, |s|). Skipped letters
// of the random-letter scheme are charged like mapped ones.
HumTrace hum_trace(std::size_t n, std::size_t special_len, Scheme scheme = Scheme::kThreeWord);

constexpr int hum_closed_form(std::size_t n, std::size_t special_len) {
  return static_cast<int>(2 * n + 2 * special_len + 1);
}

}  // namespace mindhash::analysis
