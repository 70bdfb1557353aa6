#include "mindhash/trial.hpp"

#include <algorithm>
#include <charconv>

#include "mindhash/error.hpp"

namespace mindhash::study {

std::string to_string(const Outcome& outcome) {
  switch (outcome.kind) {
    case OutcomeKind::kPending: return "pending";
    case OutcomeKind::kSuccess: return "success_on_" + std::to_string(outcome.success_on);
    case OutcomeKind::kRevealed: return "revealed";
  }
  return "pending";
}

Outcome outcome_from_string(std::string_view text) {
  if (text == "pending") return {};
  if (text == "revealed") return {OutcomeKind::kRevealed, 0};
  constexpr std::string_view prefix = "success_on_";
  if (text.substr(0, prefix.size()) == prefix) {
    int k = 0;
    auto rest = text.substr(prefix.size());
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec == std::errc{} && p == rest.data() + rest.size() && k >= 1 && k <= kMaxAttempts) {
      return {OutcomeKind::kSuccess, k};
    }
  }
  throw Error(ErrorCode::kParse, "bad outcome \"" + std::string(text) + "\"");
}

std::string_view to_string(HintKind kind) {
  return kind == HintKind::kInstructions ? "instructions" : "secret_key";
}

HintKind hint_kind_from_string(std::string_view text) {
  if (text == "instructions") return HintKind::kInstructions;
  if (text == "secret_key") return HintKind::kSecretKey;
  throw Error(ErrorCode::kInvalidArgument, "unknown hint kind \"" + std::string(text) + "\"");
}

GradeResult grade_attempt(TrialRecord& trial, std::string typed,
                          std::vector<std::int64_t> keystroke_ms) {
  if (trial.outcome.resolved() || trial.attempts.size() >= kMaxAttempts) {
    throw Error(ErrorCode::kTrialClosed, "trial " + std::to_string(trial.trial_index) +
                                             " is already " + to_string(trial.outcome));
  }
  if (!std::is_sorted(keystroke_ms.begin(), keystroke_ms.end())) {
    throw Error(ErrorCode::kInvalidArgument, "keystroke timestamps must be nondecreasing");
  }
  const bool match = typed == trial.expected_password;
  trial.attempts.push_back({std::move(typed), std::move(keystroke_ms)});
  const int used = static_cast<int>(trial.attempts.size());

  GradeResult result;
  result.attempts_used = used;
  if (match) {
    trial.outcome = {OutcomeKind::kSuccess, used};
  } else if (used == kMaxAttempts) {
    trial.outcome = {OutcomeKind::kRevealed, 0};
    result.disclosed = trial.expected_password;
  }
  result.outcome = trial.outcome;
  return result;
}

nlohmann::json to_json(const TrialRecord& trial) {
  auto attempts = nlohmann::json::array();
  for (const auto& a : trial.attempts) {
    attempts.push_back({{"typed", a.typed}, {"keystroke_ms", a.keystroke_ms}});
  }
  return {
      {"session_id", trial.session_id},
      {"day_index", trial.day_index},
      {"trial_index", trial.trial_index},
      {"challenge", trial.challenge},
      {"expected_password", trial.expected_password},
      {"attempts", std::move(attempts)},
      {"hints", {{"instructions", trial.hints.instructions}, {"secret_key", trial.hints.secret_key}}},
      {"outcome", to_string(trial.outcome)},
      {"recorded_at", trial.recorded_at},
  };
}

TrialRecord trial_from_json(const nlohmann::json& j) {
  try {
    TrialRecord t;
    t.session_id = j.at("session_id").get<std::string>();
    t.day_index = j.at("day_index").get<int>();
    t.trial_index = j.at("trial_index").get<int>();
    t.challenge = j.at("challenge").get<std::string>();
    t.expected_password = j.at("expected_password").get<std::string>();
    for (const auto& a : j.at("attempts")) {
      t.attempts.push_back(
          {a.at("typed").get<std::string>(), a.at("keystroke_ms").get<std::vector<std::int64_t>>()});
    }
    if (t.attempts.size() > kMaxAttempts) throw Error(ErrorCode::kParse, "more than 3 attempts");
    t.hints.instructions = j.at("hints").at("instructions").get<int>();
    t.hints.secret_key = j.at("hints").at("secret_key").get<int>();
    t.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    t.recorded_at = j.value("recorded_at", std::string{});
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("trial record: ") + e.what());
  }
}

}  // namespace mindhash::study
