#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <httplib.h>

#include "mindhash/api.hpp"
#include "mindhash/key_io.hpp"
#include "mindhash/password.hpp"
#include "mindhash/session_log.hpp"

using namespace mindhash;
using namespace mindhash::api;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("mindhash_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

ApiOptions fixed_options() {
  ApiOptions o;
  o.seed = 42;
  o.clock = [] { return std::string("2024-01-01T00:00:00.000Z"); };
  return o;
}

ApiResponse call(ApiService& s, const std::string& method, const std::string& path,
                 nlohmann::json body = nlohmann::json::object()) {
  return s.handle({method, path, std::move(body), {}});
}

std::string create(ApiService& s, const std::string& scheme) {
  const auto r = call(s, "POST", "/sessions", {{"scheme", scheme}});
  REQUIRE(r.status == 201);
  CHECK(r.body.at("state") == "learning");
  return r.body.at("session_id").get<std::string>();
}

}  // namespace

TEST_CASE("session flow through the service") {
  TempDir dir("api_flow");
  ApiService service(dir.path, fixed_options());
  const auto id = create(service, "three-word");
  const auto base = "/sessions/" + id;

  CHECK(call(service, "GET", base + "/next-challenge").status == 409);

  auto bad = key_to_json(example_three_word_key());
  bad["words"] = {"cat", "dog", "pig"};
  auto r = call(service, "POST", base + "/key", {{"key", bad}});
  CHECK(r.status == 422);
  CHECK(r.body.at("error") == "InvalidKey");
  CHECK_FALSE(r.body.at("failures").empty());

  const SecretKey key = example_three_word_key();
  r = call(service, "POST", base + "/key", {{"key", key_to_json(key)}});
  REQUIRE(r.status == 200);
  CHECK(r.body.at("distinct_letters") == 17);

  r = call(service, "GET", base + "/next-challenge");
  REQUIRE(r.status == 200);
  CHECK(r.body.at("trial_index") == 0);
  CHECK(r.body.at("day_index") == 0);
  CHECK_FALSE(r.body.contains("expected_password"));
  const auto challenge = r.body.at("challenge").get<std::string>();
  // Idempotent while the trial is open.
  CHECK(call(service, "GET", base + "/next-challenge").body.at("trial_index") == 0);

  const auto expected = generate_password(key, Challenge::normalize(challenge)).value;
  r = call(service, "POST", base + "/attempts",
           {{"typed", expected}, {"keystroke_timestamps", std::vector<int>(expected.size(), 5)}});
  REQUIRE(r.status == 200);
  CHECK(r.body.at("outcome") == "success_on_1");
  CHECK_FALSE(r.body.contains("correct_password"));

  // Second trial: hint, then three misses.
  const auto second = call(service, "GET", base + "/next-challenge").body;
  CHECK(second.at("trial_index") == 1);
  r = call(service, "POST", base + "/hints", {{"kind", "secret_key"}});
  REQUIRE(r.status == 200);
  CHECK(key_from_json(r.body.at("key")) == key);
  const auto log = study::read_session_log(dir.path / (id + ".jsonl"));
  CHECK(log.events.back().at("type") == "hint");
  CHECK(log.events.back().at("kind") == "secret_key");
  r = call(service, "POST", base + "/hints", {{"kind", "instructions"}});
  CHECK(r.body.at("instructions").get<std::string>().find("wild card") != std::string::npos);

  for (int k = 1; k <= 3; ++k) {
    r = call(service, "POST", base + "/attempts", {{"typed", "wrong"}});
    REQUIRE(r.status == 200);
    CHECK(r.body.at("attempts_remaining") == (k < 3 ? 3 - k : 0));
  }
  CHECK(r.body.at("outcome") == "revealed");
  const auto second_expected =
      generate_password(key, Challenge::normalize(second.at("challenge").get<std::string>())).value;
  CHECK(r.body.at("correct_password") == second_expected);

  r = call(service, "POST", base + "/attempts", {{"typed", second_expected}});
  CHECK(r.status == 409);
  CHECK(r.body.at("error") == "TrialClosed");

  const auto state = call(service, "GET", base).body;
  CHECK(state.at("state") == "practicing");
  CHECK(state.at("trials_completed") == 2);
  CHECK(state.at("hints").at("secret_key") == 1);
  CHECK(state.dump().find(second_expected) == std::string::npos);

  r = call(service, "POST", base + "/recall", {{"text", "unicorn yellow sunshine"}});
  CHECK(r.status == 200);
  CHECK(r.body.at("correct") == 0);

  r = service.handle({"GET", "/metrics", nlohmann::json::object(), {{"session", id}}});
  REQUIRE(r.status == 200);
  CHECK(r.body.at("days").size() == 1);
  CHECK(r.body.at("days")[0].at("success_within_3_rate") == 0.5);
  CHECK(r.body.at("hint_presses").at(id).at("secret_key") == 1);
}

TEST_CASE("routing errors") {
  TempDir dir("api_errors");
  ApiService service(dir.path, fixed_options());
  CHECK(call(service, "GET", "/nowhere").status == 404);
  CHECK(call(service, "GET", "/sessions/ffff").status == 404);
  CHECK(call(service, "GET", "/sessions/../../etc").status == 404);
  CHECK(call(service, "POST", "/sessions", {{"nope", 1}}).status == 400);
  CHECK(call(service, "POST", "/sessions", {{"scheme", "rot13"}}).status == 400);
  const auto id = create(service, "random-letter");
  CHECK(call(service, "POST", "/sessions/" + id + "/attempts", {{"typed", "x"}}).status == 409);
  CHECK(call(service, "POST", "/sessions/" + id + "/hints", {{"kind", "secret_key"}}).status == 409);
  CHECK(call(service, "POST", "/sessions/" + id + "/hints", {{"kind", "bogus"}}).status == 400);
  CHECK(call(service, "DELETE", "/sessions/" + id).status == 404);
  CHECK(service.handle({"GET", "/metrics", {}, {{"session", "abcd"}}}).status == 404);
}

TEST_CASE("sessions survive a restart") {
  TempDir dir("api_restart");
  std::string id;
  nlohmann::json before;
  {
    ApiService service(dir.path, fixed_options());
    id = create(service, "random-letter");
    REQUIRE(call(service, "POST", "/sessions/" + id + "/key", {{"generate", true}}).status == 200);
    for (int i = 0; i < 2; ++i) {
      call(service, "GET", "/sessions/" + id + "/next-challenge");
      call(service, "POST", "/sessions/" + id + "/attempts", {{"typed", "x"}});
    }
    before = call(service, "GET", "/sessions/" + id).body;
  }
  ApiService restored(dir.path, fixed_options());
  CHECK(restored.session_count() == 1);
  CHECK(call(restored, "GET", "/sessions/" + id).body == before);
  const auto snap = restored.snapshot(id);
  REQUIRE(snap);
  REQUIRE(snap->open_trial());
  CHECK(snap->open_trial()->attempts.size() == 2);
  // Continuing after restart uses the restored open trial.
  const auto expected = snap->open_trial()->expected_password;
  const auto r = call(restored, "POST", "/sessions/" + id + "/attempts", {{"typed", expected}});
  CHECK(r.body.at("outcome") == "success_on_3");
}

TEST_CASE("service passwords match the library") {
  TempDir dir("api_identity");
  ApiService service(dir.path, fixed_options());
  const auto id = create(service, "random-letter");
  const SecretKey key = example_random_letter_key();
  REQUIRE(call(service, "POST", "/sessions/" + id + "/key", {{"key", key_to_json(key)}}).status == 200);
  for (int i = 0; i < 15; ++i) {
    const auto c = call(service, "GET", "/sessions/" + id + "/next-challenge").body;
    const auto pw = generate_password(key, Challenge::normalize(c.at("challenge").get<std::string>()));
    CHECK(call(service, "POST", "/sessions/" + id + "/attempts", {{"typed", pw.value}})
              .body.at("outcome") == "success_on_1");
  }
  CHECK(call(service, "GET", "/sessions/" + id).body.at("state") == "followup");
}

TEST_CASE("http front end") {
  TempDir dir("api_http");
  ApiService service(dir.path, fixed_options());
  HttpServer server(service);
  const int port = server.start("127.0.0.1", 0);
  REQUIRE(port > 0);
  httplib::Client client("127.0.0.1", port);

  auto res = client.Post("/sessions", R"({"scheme":"three-word"})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 201);
  const auto id = nlohmann::json::parse(res->body).at("session_id").get<std::string>();

  res = client.Post("/sessions/" + id + "/key",
                    nlohmann::json{{"key", key_to_json(example_three_word_key())}}.dump(),
                    "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);

  res = client.Get("/sessions/" + id + "/next-challenge");
  REQUIRE(res);
  CHECK(res->status == 200);
  const auto challenge = nlohmann::json::parse(res->body).at("challenge").get<std::string>();
  const auto pw = generate_password(example_three_word_key(), Challenge::normalize(challenge)).value;

  res = client.Post("/sessions/" + id + "/attempts", nlohmann::json{{"typed", pw}}.dump(),
                    "application/json");
  REQUIRE(res);
  CHECK(nlohmann::json::parse(res->body).at("outcome") == "success_on_1");

  res = client.Post("/sessions/" + id + "/attempts", "{not json", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);

  res = client.Get("/metrics?session=" + id);
  REQUIRE(res);
  CHECK(res->status == 200);
  server.stop();
}
