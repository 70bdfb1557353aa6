#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mindhash::study {

inline constexpr int kPracticeTrials = 15;
inline constexpr int kTrialsPerFollowup = 4;

struct Schedule {
  std::vector<int> followup_days{1, 2, 4, 8, 16, 32};
  // The last follow-up may be taken on any of these many consecutive days.
  int final_window_days = 4;
};

struct FollowupWindow {
  int day_index = 0;
  std::chrono::sys_days opens;
  std::chrono::sys_days closes;  // inclusive
};

std::vector<FollowupWindow> followup_schedule(std::chrono::year_month_day start,
                                              const Schedule& schedule = {});

std::string iso_date(std::chrono::sys_days day);
// "YYYY-MM-DD"; nullopt when malformed or not a calendar date.
std::optional<std::chrono::year_month_day> parse_iso_date(std::string_view text);
// Current UTC time as "YYYY-MM-DDTHH:MM:SS.mmmZ".
std::string iso_now();

}  // namespace mindhash::study
