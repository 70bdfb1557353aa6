#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mindhash/recall.hpp"
#include "mindhash/trial.hpp"

namespace mindhash::study {

inline constexpr int kLogVersion = 1;

// JSONL: a {"log_version":1,...} header line, then one event per line. Lines
// are compact dumps with sorted keys, so equal logs are byte-identical.
class SessionLogWriter {
 public:
  // Creates the file with a header when missing; otherwise appends.
  SessionLogWriter(const std::filesystem::path& path, const std::string& session_id);

  // Written and flushed before returning; throws kIo on failure.
  void append(const nlohmann::json& event);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

struct SessionLogContents {
  nlohmann::json header;
  std::vector<nlohmann::json> events;
};

SessionLogContents read_session_log(const std::filesystem::path& path);

// Writes a log of closed trials only.
void write_trial_log(const std::filesystem::path& path, std::span<const TrialRecord> trials,
                     const std::string& session_id = "");

std::vector<TrialRecord> trials_from_events(std::span<const nlohmann::json> events);
std::vector<RecallRecord> recalls_from_events(std::span<const nlohmann::json> events);
std::vector<TrialRecord> load_trials(const std::filesystem::path& path);

}  // namespace mindhash::study
