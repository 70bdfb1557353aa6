#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "mindhash/session.hpp"

namespace httplib {
class Server;
}

namespace mindhash::api {

struct ApiRequest {
  std::string method;
  std::string path;
  nlohmann::json body;
  std::map<std::string, std::string> query;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

struct ApiOptions {
  // Seeds session ids and per-session seeds; random_device when absent.
  std::optional<std::uint64_t> seed;
  std::function<std::string()> clock;  // ISO-8601 timestamps; iso_now() when empty
  std::function<std::chrono::year_month_day()> today;
};

// Session endpoints over per-session JSONL logs in log_dir. Sessions found in
// log_dir are restored by replay at construction. Calls on one session are
// serialized; every state change is appended to its log before it is applied
// and acknowledged.
class ApiService {
 public:
  explicit ApiService(std::filesystem::path log_dir, ApiOptions options = {});
  ~ApiService();

  ApiService(const ApiService&) = delete;
  ApiService& operator=(const ApiService&) = delete;

  ApiResponse handle(const ApiRequest& request);

  std::size_t session_count() const;
  // Copy of a session's state, for tests and the CLI.
  std::optional<study::Session> snapshot(const std::string& session_id) const;

 private:
  struct Slot;

  std::shared_ptr<Slot> find(const std::string& id) const;
  std::string new_session_id();
  std::string now() const;

  ApiResponse create_session(const ApiRequest& request);
  ApiResponse set_key(Slot& slot, const nlohmann::json& body);
  ApiResponse next_challenge(Slot& slot);
  ApiResponse attempt(Slot& slot, const nlohmann::json& body);
  ApiResponse hint(Slot& slot, const nlohmann::json& body);
  ApiResponse recall(Slot& slot, const nlohmann::json& body);
  ApiResponse drill(Slot& slot, const nlohmann::json& body);
  ApiResponse metrics(const ApiRequest& request) const;

  std::filesystem::path log_dir_;
  ApiOptions options_;
  mutable std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t id_counter_ = 0;
};

// HTTP front end; optionally serves a static trainer bundle at "/".
class HttpServer {
 public:
  HttpServer(ApiService& service, std::optional<std::filesystem::path> static_dir = {});
  ~HttpServer();

  // Binds and serves on a background thread; returns the bound port (port 0 picks one).
  int start(const std::string& host, int port);
  // Blocks until stop() or failure; returns false when the bind fails.
  bool listen(const std::string& host, int port);
  void stop();

 private:
  ApiService& service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace mindhash::api
