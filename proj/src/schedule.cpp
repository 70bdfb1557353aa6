#include "mindhash/schedule.hpp"

#include <charconv>
#include <cstdio>

namespace mindhash::study {

using namespace std::chrono;

std::vector<FollowupWindow> followup_schedule(year_month_day start, const Schedule& schedule) {
  std::vector<FollowupWindow> out;
  const sys_days origin{start};
  for (std::size_t i = 0; i < schedule.followup_days.size(); ++i) {
    const int d = schedule.followup_days[i];
    const bool last = i + 1 == schedule.followup_days.size();
    const int span = last ? schedule.final_window_days - 1 : 0;
    out.push_back({d, origin + days{d}, origin + days{d + span}});
  }
  return out;
}

std::string iso_date(sys_days day) {
  const year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::optional<year_month_day> parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto num = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, v);
    if (ec != std::errc{} || p != text.data() + pos + len) return std::nullopt;
    return v;
  };
  auto y = num(0, 4), m = num(5, 2), d = num(8, 2);
  if (!y || !m || !d) return std::nullopt;
  year_month_day ymd{year{*y}, month{static_cast<unsigned>(*m)}, day{static_cast<unsigned>(*d)}};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

std::string iso_now() {
  const auto now = time_point_cast<milliseconds>(system_clock::now());
  const auto today = floor<days>(now);
  const hh_mm_ss tod{now - today};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02d.%03dZ", iso_date(today).c_str(),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()),
                static_cast<int>(tod.subseconds().count()));
  return buf;
}

}  // namespace mindhash::study
