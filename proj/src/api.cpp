#include "mindhash/api.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include <httplib.h>

#include "mindhash/error.hpp"
#include "mindhash/key_io.hpp"
#include "mindhash/keygen.hpp"
#include "mindhash/metrics.hpp"
#include "mindhash/random.hpp"

namespace mindhash::api {

struct ApiService::Slot {
  std::mutex mutex;
  study::Session session;
  study::SessionLogWriter writer;

  Slot(study::Session s, const std::filesystem::path& path)
      : session(std::move(s)), writer(path, session.id()) {}

  // Log first, then fold into memory.
  void commit(const std::vector<nlohmann::json>& events) {
    for (const auto& e : events) writer.append(e);
    for (const auto& e : events) session.apply(e);
  }
};

namespace {

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, {{"error", code}, {"message", message}}};
}

ApiResponse from_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidKey: return error_response(422, to_string(e.code()), e.what());
    case ErrorCode::kInvalidState:
    case ErrorCode::kTrialClosed: return error_response(409, to_string(e.code()), e.what());
    case ErrorCode::kIo: return error_response(500, to_string(e.code()), e.what());
    default: return error_response(400, to_string(e.code()), e.what());
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

bool valid_id(const std::string& id) {
  return !id.empty() && id.size() <= 64 &&
         std::all_of(id.begin(), id.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

ApiService::ApiService(std::filesystem::path log_dir, ApiOptions options)
    : log_dir_(std::move(log_dir)), options_(std::move(options)) {
  std::filesystem::create_directories(log_dir_);
  for (const auto& entry : std::filesystem::directory_iterator(log_dir_)) {
    if (entry.path().extension() != ".jsonl") continue;
    auto session = study::Session::replay(study::read_session_log(entry.path()));
    auto id = session.id();
    sessions_.emplace(id, std::make_shared<Slot>(std::move(session), entry.path()));
  }
}

ApiService::~ApiService() = default;

std::size_t ApiService::session_count() const {
  std::lock_guard lock(registry_mutex_);
  return sessions_.size();
}

std::optional<study::Session> ApiService::snapshot(const std::string& session_id) const {
  auto slot = find(session_id);
  if (!slot) return std::nullopt;
  std::lock_guard lock(slot->mutex);
  return slot->session;
}

std::shared_ptr<ApiService::Slot> ApiService::find(const std::string& id) const {
  std::lock_guard lock(registry_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string ApiService::now() const { return options_.clock ? options_.clock() : study::iso_now(); }

std::string ApiService::new_session_id() {
  std::uint64_t bits;
  if (options_.seed) {
    auto rng = make_stream(*options_.seed, 1'000'000 + id_counter_++);
    bits = rng();
  } else {
    std::random_device rd;
    bits = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << bits;
  return os.str();
}

ApiResponse ApiService::handle(const ApiRequest& request) {
  try {
    const auto parts = split_path(request.path);
    const auto& m = request.method;

    if (parts.size() == 1 && parts[0] == "metrics" && m == "GET") return metrics(request);
    if (parts.empty() || parts[0] != "sessions") {
      return error_response(404, "NotFound", "no route for " + request.path);
    }
    if (parts.size() == 1) {
      if (m == "POST") return create_session(request);
      return error_response(405, "MethodNotAllowed", m + " " + request.path);
    }

    auto slot = valid_id(parts[1]) ? find(parts[1]) : nullptr;
    if (!slot) return error_response(404, "NotFound", "unknown session " + parts[1]);
    std::lock_guard lock(slot->mutex);

    if (parts.size() == 2 && m == "GET") return {200, slot->session.state_json()};
    if (parts.size() == 3) {
      const auto& action = parts[2];
      if (action == "next-challenge" && m == "GET") return next_challenge(*slot);
      if (action == "key" && m == "POST") return set_key(*slot, request.body);
      if (action == "attempts" && m == "POST") return attempt(*slot, request.body);
      if (action == "hints" && m == "POST") return hint(*slot, request.body);
      if (action == "recall" && m == "POST") return recall(*slot, request.body);
      if (action == "drills" && m == "POST") return drill(*slot, request.body);
    }
    return error_response(404, "NotFound", "no route for " + m + " " + request.path);
  } catch (const Error& e) {
    return from_error(e);
  } catch (const nlohmann::json::exception& e) {
    return error_response(400, "BadRequest", e.what());
  }
}

ApiResponse ApiService::create_session(const ApiRequest& request) {
  const auto& body = request.body;
  if (!body.is_object() || !body.contains("scheme")) {
    return error_response(400, "BadRequest", "body must be {\"scheme\": ...}");
  }
  study::SessionConfig config;
  config.scheme = scheme_from_string(body.at("scheme").get<std::string>());
  if (body.contains("seed")) {
    config.seed = body.at("seed").get<std::uint64_t>();
  } else if (options_.seed) {
    config.seed = make_stream(*options_.seed, 2'000'000 + id_counter_)();
  } else {
    config.seed = std::random_device{}();
  }
  if (body.contains("start_date")) {
    auto d = study::parse_iso_date(body.at("start_date").get<std::string>());
    if (!d) return error_response(400, "BadRequest", "start_date must be YYYY-MM-DD");
    config.start_date = *d;
  } else if (options_.today) {
    config.start_date = options_.today();
  } else {
    config.start_date = std::chrono::year_month_day{
        std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())};
  }

  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(registry_mutex_);
    do {
      config.session_id = new_session_id();
    } while (sessions_.count(config.session_id) != 0);
    const auto created = study::Session::created_event(config, now());
    study::Session session(created);
    slot = std::make_shared<Slot>(std::move(session), log_dir_ / (config.session_id + ".jsonl"));
    slot->writer.append(created);
    sessions_.emplace(config.session_id, slot);
  }

  std::lock_guard lock(slot->mutex);
  if (body.contains("key")) {
    auto r = set_key(*slot, body);
    if (r.status != 200) return r;
  }
  return {201, {{"session_id", slot->session.id()}, {"state", to_string(slot->session.phase())}}};
}

ApiResponse ApiService::set_key(Slot& slot, const nlohmann::json& body) {
  SecretKey key;
  if (body.value("generate", false)) {
    if (slot.session.config().scheme != Scheme::kRandomLetter) {
      return error_response(400, "BadRequest", "only random-letter keys can be generated");
    }
    key = keygen::sample_random_letter_key(slot.session.config().seed);
  } else {
    auto j = body.at("key");
    if (!j.contains("scheme")) j["scheme"] = to_string(slot.session.config().scheme);
    key = key_from_json(j);
  }
  const auto report = keygen::validate_key(key);
  if (!report.ok) {
    return {422, {{"error", "InvalidKey"}, {"failures", report.failures}, {"warnings", report.warnings}}};
  }
  slot.commit(slot.session.plan_set_key(key, now()));
  return {200,
          {{"ok", true},
           {"warnings", report.warnings},
           {"distinct_letters", report.distinct_letters},
           {"state", to_string(slot.session.phase())}}};
}

ApiResponse ApiService::next_challenge(Slot& slot) {
  slot.commit(slot.session.plan_next_challenge(now()));
  const auto& t = *slot.session.open_trial();
  return {200,
          {{"trial_index", t.trial_index},
           {"day_index", t.day_index},
           {"challenge", t.challenge},
           {"attempts_used", t.attempts.size()},
           {"state", to_string(slot.session.phase())}}};
}

ApiResponse ApiService::attempt(Slot& slot, const nlohmann::json& body) {
  const auto typed = body.at("typed").get<std::string>();
  const auto keystrokes = body.value("keystroke_timestamps", std::vector<std::int64_t>{});
  const auto events = slot.session.plan_attempt(typed, keystrokes, now());
  const auto trial_index = slot.session.open_trial()->trial_index;
  const auto expected = slot.session.open_trial()->expected_password;
  slot.commit(events);

  const auto outcome = study::outcome_from_string(events.front().at("outcome").get<std::string>());
  nlohmann::json out{{"trial_index", trial_index},
                     {"outcome", study::to_string(outcome)},
                     {"attempts_remaining", 0},
                     {"state", to_string(slot.session.phase())}};
  if (slot.session.open_trial()) {
    out["attempts_remaining"] =
        study::kMaxAttempts - static_cast<int>(slot.session.open_trial()->attempts.size());
  }
  if (outcome.kind == study::OutcomeKind::kRevealed) out["correct_password"] = expected;
  return {200, out};
}

ApiResponse ApiService::hint(Slot& slot, const nlohmann::json& body) {
  const auto kind = study::hint_kind_from_string(body.at("kind").get<std::string>());
  slot.commit(slot.session.plan_hint(kind, now()));
  nlohmann::json out{{"kind", study::to_string(kind)}};
  if (kind == study::HintKind::kSecretKey) {
    out["key"] = key_to_json(*slot.session.key());
  } else {
    out["instructions"] = study::scheme_instructions(slot.session.config().scheme);
  }
  return {200, out};
}

ApiResponse ApiService::recall(Slot& slot, const nlohmann::json& body) {
  slot.commit(slot.session.plan_recall(body.at("text").get<std::string>(), now()));
  const auto& r = slot.session.recalls().back();
  return {200, {{"correct", r.score.correct}, {"total", r.score.total}, {"day_index", r.day_index}}};
}

ApiResponse ApiService::drill(Slot& slot, const nlohmann::json& body) {
  slot.commit(slot.session.plan_drill(body.at("transcript"), now()));
  return {200, {{"drills_completed", slot.session.drills_completed()}}};
}

ApiResponse ApiService::metrics(const ApiRequest& request) const {
  std::vector<std::shared_ptr<Slot>> slots;
  if (auto it = request.query.find("session"); it != request.query.end()) {
    auto slot = find(it->second);
    if (!slot) return error_response(404, "NotFound", "unknown session " + it->second);
    slots.push_back(slot);
  } else {
    std::lock_guard lock(registry_mutex_);
    for (const auto& [id, s] : sessions_) slots.push_back(s);
  }
  std::vector<study::TrialRecord> trials;
  std::vector<study::RecallRecord> recalls;
  nlohmann::json hints = nlohmann::json::object();
  for (const auto& s : slots) {
    std::lock_guard lock(s->mutex);
    const auto& t = s->session.trials();
    trials.insert(trials.end(), t.begin(), t.end());
    const auto& r = s->session.recalls();
    recalls.insert(recalls.end(), r.begin(), r.end());
    const auto& h = s->session.total_hints();
    hints[s->session.id()] = {{"instructions", h.instructions}, {"secret_key", h.secret_key}};
  }
  auto out = study::to_json(study::aggregate_metrics(trials, recalls));
  out["hint_presses"] = std::move(hints);
  return {200, out};
}

HttpServer::HttpServer(ApiService& service, std::optional<std::filesystem::path> static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request{req.method, req.path, nlohmann::json(nullptr), {}};
    for (const auto& [k, v] : req.params) request.query.emplace(k, v);
    if (!req.body.empty()) {
      try {
        request.body = nlohmann::json::parse(req.body);
      } catch (const nlohmann::json::parse_error& e) {
        res.status = 400;
        res.set_content(nlohmann::json{{"error", "BadRequest"}, {"message", e.what()}}.dump(),
                        "application/json");
        return;
      }
    } else {
      request.body = nlohmann::json::object();
    }
    const auto response = service_.handle(request);
    res.status = response.status;
    res.set_content(response.body.dump(), "application/json");
  };
  server_->Get(R"(/sessions/.*)", dispatch);
  server_->Post(R"(/sessions(/.*)?)", dispatch);
  server_->Get("/metrics", dispatch);
  if (static_dir) server_->set_mount_point("/", static_dir->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

bool HttpServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

void HttpServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace mindhash::api
