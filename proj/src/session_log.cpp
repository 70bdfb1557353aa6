#include "mindhash/session_log.hpp"

#include "mindhash/error.hpp"

namespace mindhash::study {
namespace {

nlohmann::json header_for(const std::string& session_id) {
  return {{"type", "header"}, {"log_version", kLogVersion}, {"session_id", session_id}};
}

}  // namespace

SessionLogWriter::SessionLogWriter(const std::filesystem::path& path, const std::string& session_id)
    : path_(path) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  out_.open(path, std::ios::app | std::ios::binary);
  if (!out_) throw Error(ErrorCode::kIo, "cannot open session log " + path.string());
  if (fresh) append(header_for(session_id));
}

void SessionLogWriter::append(const nlohmann::json& event) {
  out_ << event.dump() << '\n';
  out_.flush();
  if (!out_) throw Error(ErrorCode::kIo, "write to " + path_.string() + " failed");
}

SessionLogContents read_session_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open session log " + path.string());
  SessionLogContents log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (log.header.is_null()) {
      if (!j.contains("log_version") || j["log_version"] != kLogVersion) {
        throw Error(ErrorCode::kParse, path.string() + ": missing or unsupported log_version header");
      }
      log.header = std::move(j);
    } else {
      log.events.push_back(std::move(j));
    }
  }
  if (log.header.is_null()) throw Error(ErrorCode::kParse, path.string() + ": empty log");
  return log;
}

void write_trial_log(const std::filesystem::path& path, std::span<const TrialRecord> trials,
                     const std::string& session_id) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << header_for(session_id).dump() << '\n';
  for (const auto& t : trials) {
    auto j = to_json(t);
    j["type"] = "trial";
    out << j.dump() << '\n';
  }
  if (!out.flush()) throw Error(ErrorCode::kIo, "write to " + path.string() + " failed");
}

std::vector<TrialRecord> trials_from_events(std::span<const nlohmann::json> events) {
  std::vector<TrialRecord> out;
  for (const auto& e : events) {
    if (e.value("type", "") == "trial") out.push_back(trial_from_json(e));
  }
  return out;
}

std::vector<RecallRecord> recalls_from_events(std::span<const nlohmann::json> events) {
  std::vector<RecallRecord> out;
  for (const auto& e : events) {
    if (e.value("type", "") != "recall") continue;
    out.push_back({e.at("session_id").get<std::string>(), e.at("day_index").get<int>(),
                   e.at("text").get<std::string>(),
                   {e.at("correct").get<int>(), e.at("total").get<int>()}});
  }
  return out;
}

std::vector<TrialRecord> load_trials(const std::filesystem::path& path) {
  return trials_from_events(read_session_log(path).events);
}

}  // namespace mindhash::study
