#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace mindhash::study {

inline constexpr int kMaxAttempts = 3;

struct Attempt {
  std::string typed;
  // Per-character key times in milliseconds, nondecreasing.
  std::vector<std::int64_t> keystroke_ms;

  bool operator==(const Attempt&) const = default;
};

enum class OutcomeKind { kPending, kSuccess, kRevealed };

struct Outcome {
  OutcomeKind kind = OutcomeKind::kPending;
  int success_on = 0;  // 1..3 when kind == kSuccess

  bool resolved() const { return kind != OutcomeKind::kPending; }
  bool operator==(const Outcome&) const = default;
};

// "pending", "success_on_<k>" or "revealed".
std::string to_string(const Outcome& outcome);
Outcome outcome_from_string(std::string_view text);

enum class HintKind { kInstructions, kSecretKey };

std::string_view to_string(HintKind kind);
HintKind hint_kind_from_string(std::string_view text);

struct HintCounts {
  int instructions = 0;
  int secret_key = 0;

  bool operator==(const HintCounts&) const = default;
};

struct TrialRecord {
  std::string session_id;
  int day_index = 0;
  int trial_index = 0;
  std::string challenge;
  std::string expected_password;
  std::vector<Attempt> attempts;
  HintCounts hints;
  Outcome outcome;
  std::string recorded_at;

  bool operator==(const TrialRecord&) const = default;
};

struct GradeResult {
  Outcome outcome;
  int attempts_used = 0;
  // The correct password, disclosed after the third miss.
  std::optional<std::string> disclosed;
};

// Exact comparison against trial.expected_password. Throws kTrialClosed once
// the trial is resolved and kInvalidArgument for decreasing timestamps.
GradeResult grade_attempt(TrialRecord& trial, std::string typed,
                          std::vector<std::int64_t> keystroke_ms = {});

nlohmann::json to_json(const TrialRecord& trial);
TrialRecord trial_from_json(const nlohmann::json& j);

}  // namespace mindhash::study
