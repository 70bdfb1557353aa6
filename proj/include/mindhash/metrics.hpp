#pragma once

#include <map>
#include <optional>
#include <span>

#include <nlohmann/json.hpp>

#include "mindhash/recall.hpp"
#include "mindhash/trial.hpp"

namespace mindhash::study {

struct DayMetrics {
  int day_index = 0;
  std::size_t trials = 0;
  std::size_t participants = 0;
  // Median over trials of (last - first keystroke) / password length.
  std::optional<double> median_sec_per_char;
  // Standard deviation across participants of their per-day medians.
  std::optional<double> median_sec_per_char_sd;
  double success_within_3_rate = 0.0;
  double mean_attempts = 0.0;
  // Participants with no login using the secret-key hint / at most one such login.
  double hint_zero_fraction = 0.0;
  double hint_at_most_one_fraction = 0.0;
};

struct MetricsReport {
  std::map<int, DayMetrics> days;
  // Hint fractions of the final day present in the log.
  std::optional<int> hint_day;
  std::optional<double> hint_zero_fraction;
  std::optional<double> hint_at_most_one_fraction;
  // Mean recall fraction over recall records.
  std::optional<double> recall_score;
};

// Pending trials are ignored. Timing uses the successful attempt, or the last
// one for revealed trials.
MetricsReport aggregate_metrics(std::span<const TrialRecord> log,
                                std::span<const RecallRecord> recalls = {});

std::optional<double> seconds_per_char(const TrialRecord& trial);

nlohmann::json to_json(const MetricsReport& report);

}  // namespace mindhash::study
