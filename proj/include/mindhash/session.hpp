#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mindhash/accounts.hpp"
#include "mindhash/keys.hpp"
#include "mindhash/recall.hpp"
#include "mindhash/schedule.hpp"
#include "mindhash/session_log.hpp"
#include "mindhash/trial.hpp"

namespace mindhash::study {

enum class Phase { kLearning, kPracticing, kFollowup, kClosed };

std::string_view to_string(Phase phase);

struct SessionConfig {
  std::string session_id;
  Scheme scheme = Scheme::kThreeWord;
  std::uint64_t seed = 0;
  std::chrono::year_month_day start_date{std::chrono::year{2024}, std::chrono::month{1},
                                         std::chrono::day{1}};
  AccountSet accounts = default_account_set();
  Schedule schedule;
};

// Event-sourced study session. plan_* members validate a command and return
// the events it produces without changing state; apply() folds one event in.
// Replaying a session's log through apply() reproduces its state exactly.
class Session {
 public:
  static nlohmann::json created_event(const SessionConfig& config, const std::string& at);

  // From a "session_created" event.
  explicit Session(const nlohmann::json& created);

  static Session replay(const SessionLogContents& log);

  void apply(const nlohmann::json& event);

  // Throws kInvalidKey (with the report) or kInvalidState after learning.
  std::vector<nlohmann::json> plan_set_key(const SecretKey& key, const std::string& at) const;
  // Empty when a trial is already open. Throws kInvalidState without a key or once closed.
  std::vector<nlohmann::json> plan_next_challenge(const std::string& at) const;
  // Throws kInvalidState with no open trial; "attempt" plus "trial" once resolved.
  std::vector<nlohmann::json> plan_attempt(const std::string& typed,
                                           const std::vector<std::int64_t>& keystroke_ms,
                                           const std::string& at) const;
  std::vector<nlohmann::json> plan_hint(HintKind kind, const std::string& at) const;
  std::vector<nlohmann::json> plan_recall(const std::string& text, const std::string& at) const;
  std::vector<nlohmann::json> plan_drill(const nlohmann::json& transcript,
                                         const std::string& at) const;

  const SessionConfig& config() const { return config_; }
  const std::string& id() const { return config_.session_id; }
  Phase phase() const { return phase_; }
  int day_index() const;
  const std::optional<SecretKey>& key() const { return key_; }
  const std::optional<TrialRecord>& open_trial() const { return open_; }
  const std::vector<TrialRecord>& trials() const { return trials_; }
  const std::vector<RecallRecord>& recalls() const { return recalls_; }
  int trials_in_phase() const { return trials_in_phase_; }
  const HintCounts& total_hints() const { return total_hints_; }
  std::size_t drills_completed() const { return drills_; }

  std::vector<FollowupWindow> followups() const;

  // Observable state; never includes key material or the expected password.
  nlohmann::json state_json() const;

 private:
  void close_trial(const TrialRecord& record);

  SessionConfig config_;
  std::optional<SecretKey> key_;
  Phase phase_ = Phase::kLearning;
  std::size_t followup_slot_ = 0;
  int trials_in_phase_ = 0;
  int trials_issued_ = 0;
  std::optional<TrialRecord> open_;
  std::vector<TrialRecord> trials_;
  std::vector<RecallRecord> recalls_;
  HintCounts total_hints_;
  std::size_t drills_ = 0;
};

// Text shown by the instructions hint.
std::string_view scheme_instructions(Scheme scheme);

}  // namespace mindhash::study
