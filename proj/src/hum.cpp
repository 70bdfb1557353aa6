#include "mindhash/hum.hpp"

namespace mindhash::analysis {

std::string_view to_string(HumStepKind kind) {
  switch (kind) {
    case HumStepKind::kRetrieve: return "retrieve";
    case HumStepKind::kOutput: return "output";
    case HumStepKind::kShift: return "shift";
  }
  return "unknown";
}

HumTrace hum_trace(std::size_t n, std::size_t special_len, Scheme /*scheme*/) {
  HumTrace trace;
  trace.steps.reserve(2 * n + 2 * special_len + 1);
  trace.steps.push_back({HumStepKind::kRetrieve, 1});
  for (std::size_t i = 0; i < n; ++i) {
    trace.steps.push_back({HumStepKind::kOutput, 1});
    trace.steps.push_back({HumStepKind::kShift, 1});
  }
  if (special_len > 0) {
    trace.steps.push_back({HumStepKind::kRetrieve, 1});
    for (std::size_t i = 0; i < special_len; ++i) {
      trace.steps.push_back({HumStepKind::kOutput, 1});
      if (i + 1 < special_len) trace.steps.push_back({HumStepKind::kShift, 1});
    }
  }
  for (const auto& s : trace.steps) trace.total += s.cost;
  return trace;
}

}  // namespace mindhash::analysis
