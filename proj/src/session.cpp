#include "mindhash/session.hpp"

#include "mindhash/error.hpp"
#include "mindhash/key_io.hpp"
#include "mindhash/keygen.hpp"
#include "mindhash/password.hpp"
#include "mindhash/random.hpp"

namespace mindhash::study {
namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kLearning: return "learning";
    case Phase::kPracticing: return "practicing";
    case Phase::kFollowup: return "followup";
    case Phase::kClosed: return "closed";
  }
  return "unknown";
}

std::string_view scheme_instructions(Scheme scheme) {
  if (scheme == Scheme::kThreeWord) {
    return "Write your three words as one string. For each letter of the website name, find its "
           "first occurrence in that string and type the next consonant after it, wrapping around "
           "to the first consonant at the end. If the letter does not occur, type your wild card. "
           "Finish with your special string.";
  }
  return "For each letter of the website name, type the consonant your map assigns to it. Skip "
         "the letters u, v, w, x, y and z. Finish with your special string.";
}

nlohmann::json Session::created_event(const SessionConfig& config, const std::string& at) {
  return {
      {"type", "session_created"},
      {"session_id", config.session_id},
      {"scheme", to_string(config.scheme)},
      {"seed", config.seed},
      {"start_date", iso_date(std::chrono::sys_days{config.start_date})},
      {"accounts", {{"frequent", config.accounts.frequent}, {"infrequent", config.accounts.infrequent}}},
      {"schedule",
       {{"followup_days", config.schedule.followup_days},
        {"final_window_days", config.schedule.final_window_days}}},
      {"at", at},
  };
}

Session::Session(const nlohmann::json& created) {
  try {
    if (created.at("type") != "session_created") {
      throw Error(ErrorCode::kParse, "session log must start with session_created");
    }
    config_.session_id = created.at("session_id").get<std::string>();
    config_.scheme = scheme_from_string(created.at("scheme").get<std::string>());
    config_.seed = created.at("seed").get<std::uint64_t>();
    auto start = parse_iso_date(created.at("start_date").get<std::string>());
    if (!start) throw Error(ErrorCode::kParse, "bad start_date");
    config_.start_date = *start;
    config_.accounts.frequent = created.at("accounts").at("frequent").get<std::vector<std::string>>();
    config_.accounts.infrequent =
        created.at("accounts").at("infrequent").get<std::vector<std::string>>();
    config_.schedule.followup_days =
        created.at("schedule").at("followup_days").get<std::vector<int>>();
    config_.schedule.final_window_days = created.at("schedule").at("final_window_days").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("session_created: ") + e.what());
  }
}

Session Session::replay(const SessionLogContents& log) {
  if (log.events.empty()) throw Error(ErrorCode::kParse, "session log has no events");
  Session s(log.events.front());
  for (std::size_t i = 1; i < log.events.size(); ++i) s.apply(log.events[i]);
  return s;
}

int Session::day_index() const {
  const auto& days = config_.schedule.followup_days;
  switch (phase_) {
    case Phase::kLearning:
    case Phase::kPracticing: return 0;
    case Phase::kFollowup: return days.at(followup_slot_);
    case Phase::kClosed: return days.empty() ? 0 : days.back();
  }
  return 0;
}

std::vector<FollowupWindow> Session::followups() const {
  return followup_schedule(config_.start_date, config_.schedule);
}

std::vector<nlohmann::json> Session::plan_set_key(const SecretKey& key, const std::string& at) const {
  if (phase_ != Phase::kLearning) {
    throw Error(ErrorCode::kInvalidState, "the key can only be chosen during learning");
  }
  if (scheme_of(key) != config_.scheme) {
    throw Error(ErrorCode::kInvalidKey, "key scheme does not match the session scheme");
  }
  const auto report = keygen::validate_key(key);
  if (!report.ok) throw Error(ErrorCode::kInvalidKey, join(report.failures));
  return {{{"type", "key_set"}, {"key", key_to_json(key)}, {"at", at}}};
}

std::vector<nlohmann::json> Session::plan_next_challenge(const std::string& at) const {
  if (phase_ == Phase::kClosed) throw Error(ErrorCode::kInvalidState, "session is closed");
  if (!key_) throw Error(ErrorCode::kInvalidState, "no validated key yet");
  if (open_) return {};

  int day = 0;
  std::string challenge;
  if (phase_ == Phase::kFollowup) {
    day = day_index();
    auto rng = make_stream(config_.seed, static_cast<std::uint64_t>(trials_issued_));
    challenge = sample_challenge(config_.accounts, rng).letters();
  } else {
    const auto& frequent = config_.accounts.frequent;
    if (frequent.empty()) throw Error(ErrorCode::kInvalidState, "no frequent accounts");
    challenge = Challenge::normalize(
                    frequent[static_cast<std::size_t>(trials_in_phase_) % frequent.size()])
                    .letters();
  }
  const auto expected = generate_password(*key_, Challenge::normalize(challenge)).value;
  return {{{"type", "challenge_issued"},
           {"day_index", day},
           {"trial_index", trials_issued_},
           {"challenge", challenge},
           {"expected_password", expected},
           {"at", at}}};
}

std::vector<nlohmann::json> Session::plan_attempt(const std::string& typed,
                                                  const std::vector<std::int64_t>& keystroke_ms,
                                                  const std::string& at) const {
  if (!open_) {
    if (!trials_.empty()) {
      throw Error(ErrorCode::kTrialClosed, "trial " + std::to_string(trials_.back().trial_index) +
                                               " is already " + to_string(trials_.back().outcome));
    }
    throw Error(ErrorCode::kInvalidState, "no open trial");
  }
  TrialRecord probe = *open_;
  const auto result = grade_attempt(probe, typed, keystroke_ms);
  std::vector<nlohmann::json> events{{{"type", "attempt"},
                                      {"trial_index", probe.trial_index},
                                      {"typed", typed},
                                      {"keystroke_ms", keystroke_ms},
                                      {"outcome", to_string(result.outcome)},
                                      {"at", at}}};
  if (result.outcome.resolved()) {
    probe.recorded_at = at;
    auto trial = to_json(probe);
    trial["type"] = "trial";
    events.push_back(std::move(trial));
  }
  return events;
}

std::vector<nlohmann::json> Session::plan_hint(HintKind kind, const std::string& at) const {
  if (kind == HintKind::kSecretKey && !key_) {
    throw Error(ErrorCode::kInvalidState, "no key to reveal yet");
  }
  return {{{"type", "hint"},
           {"kind", to_string(kind)},
           {"trial_index", open_ ? nlohmann::json(open_->trial_index) : nlohmann::json(nullptr)},
           {"day_index", day_index()},
           {"at", at}}};
}

std::vector<nlohmann::json> Session::plan_recall(const std::string& text,
                                                 const std::string& at) const {
  if (!key_) throw Error(ErrorCode::kInvalidState, "no key to recall yet");
  const auto score = score_recall(*key_, text);
  return {{{"type", "recall"},
           {"session_id", id()},
           {"day_index", day_index()},
           {"text", text},
           {"correct", score.correct},
           {"total", score.total},
           {"at", at}}};
}

std::vector<nlohmann::json> Session::plan_drill(const nlohmann::json& transcript,
                                                const std::string& at) const {
  return {{{"type", "drill"}, {"transcript", transcript}, {"at", at}}};
}

void Session::apply(const nlohmann::json& event) {
  const auto type = event.value("type", std::string{});
  try {
    if (type == "key_set") {
      key_ = key_from_json(event.at("key"));
    } else if (type == "challenge_issued") {
      if (open_) throw Error(ErrorCode::kParse, "challenge issued while a trial is open");
      if (phase_ == Phase::kLearning) phase_ = Phase::kPracticing;
      TrialRecord t;
      t.session_id = id();
      t.day_index = event.at("day_index").get<int>();
      t.trial_index = event.at("trial_index").get<int>();
      t.challenge = event.at("challenge").get<std::string>();
      t.expected_password = event.at("expected_password").get<std::string>();
      open_ = std::move(t);
      ++trials_issued_;
    } else if (type == "attempt") {
      if (!open_) throw Error(ErrorCode::kParse, "attempt without an open trial");
      const auto result = grade_attempt(*open_, event.at("typed").get<std::string>(),
                                        event.at("keystroke_ms").get<std::vector<std::int64_t>>());
      if (to_string(result.outcome) != event.at("outcome").get<std::string>()) {
        throw Error(ErrorCode::kParse, "logged attempt outcome disagrees with grading");
      }
      if (result.outcome.resolved()) open_->recorded_at = event.at("at").get<std::string>();
    } else if (type == "trial") {
      close_trial(trial_from_json(event));
    } else if (type == "hint") {
      const auto kind = hint_kind_from_string(event.at("kind").get<std::string>());
      auto bump = [kind](HintCounts& h) {
        ++(kind == HintKind::kInstructions ? h.instructions : h.secret_key);
      };
      bump(total_hints_);
      if (open_ && !open_->outcome.resolved()) bump(open_->hints);
    } else if (type == "recall") {
      recalls_.push_back({id(), event.at("day_index").get<int>(), event.at("text").get<std::string>(),
                          {event.at("correct").get<int>(), event.at("total").get<int>()}});
    } else if (type == "drill") {
      ++drills_;
    } else {
      throw Error(ErrorCode::kParse, "unknown session event \"" + type + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, type + ": " + e.what());
  }
}

void Session::close_trial(const TrialRecord& record) {
  if (!open_ || !open_->outcome.resolved() || !(record == *open_)) {
    throw Error(ErrorCode::kParse, "trial record does not match the open trial");
  }
  trials_.push_back(record);
  open_.reset();
  ++trials_in_phase_;

  const auto& days = config_.schedule.followup_days;
  if (phase_ == Phase::kPracticing && trials_in_phase_ == kPracticeTrials) {
    trials_in_phase_ = 0;
    followup_slot_ = 0;
    phase_ = days.empty() ? Phase::kClosed : Phase::kFollowup;
  } else if (phase_ == Phase::kFollowup && trials_in_phase_ == kTrialsPerFollowup) {
    trials_in_phase_ = 0;
    if (++followup_slot_ == days.size()) {
      followup_slot_ = days.size() - 1;
      phase_ = Phase::kClosed;
    }
  }
}

nlohmann::json Session::state_json() const {
  nlohmann::json open = nullptr;
  if (open_) {
    open = {{"trial_index", open_->trial_index},
            {"day_index", open_->day_index},
            {"challenge", open_->challenge},
            {"attempts_used", open_->attempts.size()},
            {"outcome", to_string(open_->outcome)}};
  }
  auto schedule = nlohmann::json::array();
  for (const auto& w : followups()) {
    schedule.push_back(
        {{"day_index", w.day_index}, {"opens", iso_date(w.opens)}, {"closes", iso_date(w.closes)}});
  }
  int per_phase = 0;
  if (phase_ == Phase::kLearning || phase_ == Phase::kPracticing) per_phase = kPracticeTrials;
  if (phase_ == Phase::kFollowup) per_phase = kTrialsPerFollowup;
  return {
      {"session_id", id()},
      {"scheme", to_string(config_.scheme)},
      {"state", to_string(phase_)},
      {"day_index", day_index()},
      {"key_set", key_.has_value()},
      {"start_date", iso_date(std::chrono::sys_days{config_.start_date})},
      {"trials_completed", trials_.size()},
      {"trials_in_phase", trials_in_phase_},
      {"trials_per_phase", per_phase},
      {"open_trial", std::move(open)},
      {"hints", {{"instructions", total_hints_.instructions}, {"secret_key", total_hints_.secret_key}}},
      {"recalls", recalls_.size()},
      {"drills_completed", drills_},
      {"schedule", std::move(schedule)},
  };
}

}  // namespace mindhash::study
