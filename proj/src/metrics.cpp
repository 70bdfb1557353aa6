#include "mindhash/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace mindhash::study {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

struct ParticipantDay {
  std::vector<double> sec_per_char;
  int logins_with_key_hint = 0;
};

}  // namespace

std::optional<double> seconds_per_char(const TrialRecord& trial) {
  if (!trial.outcome.resolved() || trial.attempts.empty() || trial.expected_password.empty()) {
    return std::nullopt;
  }
  const auto& attempt = trial.outcome.kind == OutcomeKind::kSuccess
                            ? trial.attempts.at(static_cast<std::size_t>(trial.outcome.success_on - 1))
                            : trial.attempts.back();
  if (attempt.keystroke_ms.empty()) return std::nullopt;
  const auto span_ms = attempt.keystroke_ms.back() - attempt.keystroke_ms.front();
  return static_cast<double>(span_ms) / 1000.0 / static_cast<double>(trial.expected_password.size());
}

MetricsReport aggregate_metrics(std::span<const TrialRecord> log,
                                std::span<const RecallRecord> recalls) {
  // day -> participant -> accumulators; std::map keeps the result independent of input order.
  std::map<int, std::map<std::string, ParticipantDay>> per_day;
  std::map<int, std::vector<const TrialRecord*>> trials_by_day;
  for (const auto& t : log) {
    if (!t.outcome.resolved()) continue;
    trials_by_day[t.day_index].push_back(&t);
    auto& p = per_day[t.day_index][t.session_id];
    if (auto s = seconds_per_char(t)) p.sec_per_char.push_back(*s);
    if (t.hints.secret_key > 0) ++p.logins_with_key_hint;
  }

  MetricsReport report;
  for (const auto& [day, trials] : trials_by_day) {
    DayMetrics m;
    m.day_index = day;
    m.trials = trials.size();

    std::vector<double> all_spc;
    std::size_t revealed = 0, attempts = 0;
    for (const auto* t : trials) {
      if (auto s = seconds_per_char(*t)) all_spc.push_back(*s);
      if (t->outcome.kind == OutcomeKind::kRevealed) ++revealed;
      attempts += t->attempts.size();
    }
    const auto n = static_cast<double>(trials.size());
    m.success_within_3_rate = 1.0 - static_cast<double>(revealed) / n;
    m.mean_attempts = static_cast<double>(attempts) / n;
    if (!all_spc.empty()) m.median_sec_per_char = median(all_spc);

    const auto& participants = per_day[day];
    m.participants = participants.size();
    std::vector<double> participant_medians;
    std::size_t zero = 0, at_most_one = 0;
    for (const auto& [id, p] : participants) {
      if (!p.sec_per_char.empty()) participant_medians.push_back(median(p.sec_per_char));
      if (p.logins_with_key_hint == 0) ++zero;
      if (p.logins_with_key_hint <= 1) ++at_most_one;
    }
    if (!participant_medians.empty()) m.median_sec_per_char_sd = sample_sd(participant_medians);
    const auto np = static_cast<double>(participants.size());
    m.hint_zero_fraction = static_cast<double>(zero) / np;
    m.hint_at_most_one_fraction = static_cast<double>(at_most_one) / np;
    report.days.emplace(day, m);
  }

  if (!report.days.empty()) {
    const auto& last = report.days.rbegin()->second;
    report.hint_day = last.day_index;
    report.hint_zero_fraction = last.hint_zero_fraction;
    report.hint_at_most_one_fraction = last.hint_at_most_one_fraction;
  }
  if (!recalls.empty()) {
    double sum = 0.0;
    for (const auto& r : recalls) sum += r.score.fraction();
    report.recall_score = sum / static_cast<double>(recalls.size());
  }
  return report;
}

nlohmann::json to_json(const MetricsReport& report) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json days = nlohmann::json::array();
  for (const auto& [day, m] : report.days) {
    days.push_back({
        {"day_index", m.day_index},
        {"trials", m.trials},
        {"participants", m.participants},
        {"median_sec_per_char", opt(m.median_sec_per_char)},
        {"median_sec_per_char_sd", opt(m.median_sec_per_char_sd)},
        {"success_within_3_rate", m.success_within_3_rate},
        {"mean_attempts", m.mean_attempts},
        {"hint_zero_fraction", m.hint_zero_fraction},
        {"hint_at_most_one_fraction", m.hint_at_most_one_fraction},
    });
  }
  return {
      {"days", std::move(days)},
      {"hint_day", report.hint_day ? nlohmann::json(*report.hint_day) : nlohmann::json(nullptr)},
      {"hint_zero_fraction", opt(report.hint_zero_fraction)},
      {"hint_at_most_one_fraction", opt(report.hint_at_most_one_fraction)},
      {"recall_score", opt(report.recall_score)},
  };
}

}  // namespace mindhash::study
