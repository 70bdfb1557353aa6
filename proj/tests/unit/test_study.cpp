#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "mindhash/accounts.hpp"
#include "mindhash/error.hpp"
#include "mindhash/metrics.hpp"
#include "mindhash/password.hpp"
#include "mindhash/recall.hpp"
#include "mindhash/schedule.hpp"
#include "mindhash/session.hpp"
#include "mindhash/session_log.hpp"
#include "mindhash/trial.hpp"

using namespace mindhash;
using namespace mindhash::study;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  auto p = fs::temp_directory_path() / ("mindhash_" + name);
  fs::remove(p);
  return p;
}

TrialRecord closed_trial(int day, int index, const std::string& session, const std::string& password,
                         std::int64_t span_ms, int attempts_needed) {
  TrialRecord t;
  t.session_id = session;
  t.day_index = day;
  t.trial_index = index;
  t.challenge = "x";
  t.expected_password = password;
  for (int a = 1; a <= attempts_needed && !t.outcome.resolved(); ++a) {
    const bool last = a == attempts_needed;
    std::vector<std::int64_t> ks;
    for (std::size_t i = 0; i < password.size(); ++i) {
      ks.push_back(static_cast<std::int64_t>(i) * span_ms / static_cast<std::int64_t>(password.size() - 1));
    }
    grade_attempt(t, last ? password : password + "?", ks);
  }
  return t;
}

double oracle_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

TEST_CASE("default account set") {
  const auto set = default_account_set();
  REQUIRE(set.frequent.size() == 15);
  REQUIRE(set.infrequent.size() == 10);
  std::vector<std::string> all = set.frequent;
  all.insert(all.end(), set.infrequent.begin(), set.infrequent.end());
  for (const auto* n : {"kite", "chef", "twist"}) {
    CHECK(std::find(all.begin(), all.end(), n) != all.end());
  }
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("challenge sampler frequencies") {
  const auto set = default_account_set();
  Rng rng(2024);
  std::map<std::string, int> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[sample_challenge(set, rng).letters()];
  int frequent = 0;
  for (const auto& n : set.frequent) {
    frequent += counts[n];
    CHECK(std::abs(counts[n] / double(draws) - 0.05) < 0.005);
  }
  for (const auto& n : set.infrequent) {
    CHECK(std::abs(counts[n] / double(draws) - 0.025) < 0.005);
  }
  CHECK(std::abs(frequent / double(draws) - 0.75) < 0.01);

  AccountSet only_infrequent{{}, {"alpha", "beta"}};
  for (int i = 0; i < 100; ++i) {
    const auto c = sample_challenge(only_infrequent, rng).letters();
    CHECK((c == "alpha" || c == "beta"));
  }
  CHECK_THROWS_AS(sample_challenge(AccountSet{}, rng), Error);

  Rng a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_challenge(set, a).letters() == sample_challenge(set, b).letters());
  }
}

TEST_CASE("grading attempts") {
  TrialRecord t;
  t.expected_password = "dpdxmxB7!";
  auto r = grade_attempt(t, "dpdxmxB7!", {0, 100, 200, 300, 400, 500, 600, 700, 800});
  CHECK(r.outcome.kind == OutcomeKind::kSuccess);
  CHECK(r.outcome.success_on == 1);
  CHECK(to_string(r.outcome) == "success_on_1");
  CHECK_FALSE(r.disclosed);
  CHECK_THROWS_AS(grade_attempt(t, "dpdxmxB7!"), Error);

  TrialRecord u;
  u.expected_password = "abc";
  CHECK(grade_attempt(u, "ABC").outcome.kind == OutcomeKind::kPending);
  CHECK(grade_attempt(u, "abc ").outcome.kind == OutcomeKind::kPending);
  r = grade_attempt(u, "abd");
  CHECK(r.outcome.kind == OutcomeKind::kRevealed);
  CHECK(r.attempts_used == 3);
  CHECK(r.disclosed == "abc");
  CHECK(to_string(r.outcome) == "revealed");
  try {
    grade_attempt(u, "abc");
    FAIL("expected TrialClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTrialClosed);
  }
  CHECK(u.attempts.size() == 3);

  TrialRecord v;
  v.expected_password = "abc";
  CHECK(grade_attempt(v, "x").outcome.kind == OutcomeKind::kPending);
  r = grade_attempt(v, "abc");
  CHECK(r.outcome.success_on == 2);

  TrialRecord w;
  w.expected_password = "abc";
  CHECK_THROWS_AS(grade_attempt(w, "abc", {5, 3, 9}), Error);
  CHECK(w.attempts.empty());

  for (const auto* s : {"pending", "success_on_1", "success_on_2", "success_on_3", "revealed"}) {
    CHECK(to_string(outcome_from_string(s)) == s);
  }
  CHECK_THROWS_AS(outcome_from_string("success_on_4"), Error);
}

TEST_CASE("follow-up schedule") {
  using namespace std::chrono;
  const year_month_day start{year{2024}, month{1}, day{1}};
  const auto windows = followup_schedule(start);
  REQUIRE(windows.size() == 6);
  const std::vector<int> days{1, 2, 4, 8, 16, 32};
  for (std::size_t i = 0; i < windows.size(); ++i) {
    CHECK(windows[i].day_index == days[i]);
    CHECK(windows[i].opens == sys_days{start} + std::chrono::days{days[i]});
    if (i + 1 < windows.size()) {
      CHECK(windows[i].closes == windows[i].opens);
      CHECK(days[i + 1] == 2 * days[i]);
    }
  }
  CHECK(iso_date(windows[2].opens) == "2024-01-05");
  CHECK(iso_date(windows[5].opens) == "2024-02-02");
  CHECK((windows[5].closes - windows[5].opens).count() == 3);

  CHECK(parse_iso_date("2024-02-30") == std::nullopt);
  CHECK(parse_iso_date("2024-2-3") == std::nullopt);
  CHECK(parse_iso_date("2024-02-29").has_value());
  CHECK(iso_now().size() == 24);
}

TEST_CASE("recall scoring") {
  const SecretKey three = example_three_word_key();
  const auto& words = std::get<ThreeWordKey>(three).words;
  CHECK(score_recall(three, words[2] + " " + words[0] + " " + words[1]) == RecallScore{3, 3});
  CHECK(score_recall(three, "") == RecallScore{0, 3});
  CHECK(score_recall(three, "").fraction() == 0.0);

  const SecretKey random = example_random_letter_key();
  CHECK(score_recall(random, "qfhcgbsklmnpjrdtnwxy") == RecallScore{20, 20});
  // Two entries wrong.
  CHECK(score_recall(random, "qfhcgbsklmnpjrdtnwbb") == RecallScore{18, 20});
  CHECK(score_recall(random, "a=q b:f c->h") == RecallScore{3, 20});
  CHECK(score_recall(random, "") == RecallScore{0, 20});
}

TEST_CASE("metrics on synthetic logs") {
  const auto empty = aggregate_metrics({});
  CHECK(empty.days.empty());
  CHECK_FALSE(empty.hint_zero_fraction);
  CHECK_FALSE(empty.recall_score);

  // Four trials, eight characters, first to last keystroke in 8 s.
  std::vector<TrialRecord> log;
  for (int i = 0; i < 4; ++i) log.push_back(closed_trial(32, i, "p1", "abcdefgh", 8000, 1));
  auto report = aggregate_metrics(log);
  REQUIRE(report.days.count(32) == 1);
  CHECK(report.days.at(32).median_sec_per_char == 1.0);
  CHECK(report.days.at(32).success_within_3_rate == 1.0);
  CHECK(report.days.at(32).mean_attempts == 1.0);
  CHECK(report.hint_zero_fraction == 1.0);
  CHECK(report.hint_at_most_one_fraction == 1.0);
  CHECK(report.hint_day == 32);

  // Hints: p1 presses the key hint on two logins, p2 on one, p3 never.
  std::vector<TrialRecord> hinted;
  for (int p = 1; p <= 3; ++p) {
    for (int i = 0; i < 4; ++i) {
      auto t = closed_trial(32, i, "p" + std::to_string(p), "abcdefgh", 4000 * p, 1);
      if (i < 3 - p) t.hints.secret_key = 2;
      if (i == 3) t.hints.instructions = 1;
      hinted.push_back(t);
    }
  }
  report = aggregate_metrics(hinted);
  CHECK(*report.hint_zero_fraction == doctest::Approx(1.0 / 3));
  CHECK(*report.hint_at_most_one_fraction == doctest::Approx(2.0 / 3));
  CHECK(report.days.at(32).participants == 3);
  CHECK(*report.days.at(32).median_sec_per_char_sd == doctest::Approx(0.5));
}

TEST_CASE("metrics properties") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> attempts(1, 4), span(700, 20000), len(2, 14), day(0, 2);
  for (int round = 0; round < 50; ++round) {
    std::vector<TrialRecord> log;
    const int n = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) {
      const int used = attempts(rng);  // 4 means revealed after three misses
      log.push_back(closed_trial(day(rng) * 4, i, "p" + std::to_string(rng() % 3),
                                 std::string(static_cast<std::size_t>(len(rng)), 'k'), span(rng),
                                 used));
    }
    const auto report = aggregate_metrics(log);

    auto shuffled = log;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(to_json(aggregate_metrics(shuffled)) == to_json(report));

    for (const auto& [d, m] : report.days) {
      std::vector<double> spc;
      std::size_t revealed = 0, total = 0;
      double attempts_sum = 0;
      for (const auto& t : log) {
        if (t.day_index != d) continue;
        ++total;
        revealed += t.outcome.kind == OutcomeKind::kRevealed;
        attempts_sum += static_cast<double>(t.attempts.size());
        const auto& a = t.attempts.back();
        spc.push_back((a.keystroke_ms.back() - a.keystroke_ms.front()) / 1000.0 /
                      static_cast<double>(t.expected_password.size()));
      }
      CHECK(m.trials == total);
      CHECK(m.success_within_3_rate == doctest::Approx(1.0 - double(revealed) / double(total)));
      CHECK(m.mean_attempts == doctest::Approx(attempts_sum / double(total)));
      CHECK(*m.median_sec_per_char == doctest::Approx(oracle_median(spc)));
    }
  }
}

TEST_CASE("pending trials are ignored and recall averages") {
  std::vector<TrialRecord> log{closed_trial(1, 0, "p", "abcd", 3000, 1)};
  TrialRecord pending;
  pending.day_index = 1;
  pending.expected_password = "abcd";
  log.push_back(pending);
  const std::vector<RecallRecord> recalls{{"p", 32, "", {3, 3}}, {"q", 32, "", {10, 20}}};
  const auto report = aggregate_metrics(log, recalls);
  CHECK(report.days.at(1).trials == 1);
  CHECK(*report.recall_score == doctest::Approx(0.75));
}

TEST_CASE("trial log round trip is byte identical") {
  std::vector<TrialRecord> log;
  for (int i = 0; i < 6; ++i) log.push_back(closed_trial(i, i, "s1", "qjqdr8*A", 1000 + i, 1 + i % 4));
  log[2].hints = {1, 2};
  log[3].recorded_at = "2024-01-02T03:04:05.000Z";

  const auto a = temp_file("roundtrip_a.jsonl");
  const auto b = temp_file("roundtrip_b.jsonl");
  write_trial_log(a, log, "s1");
  const auto back = load_trials(a);
  CHECK(back == log);
  write_trial_log(b, back, "s1");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp(a) == slurp(b));
  const auto contents = read_session_log(a);
  CHECK(contents.header.at("log_version") == kLogVersion);
  CHECK(contents.events.size() == log.size());
  fs::remove(a);
  fs::remove(b);

  CHECK_THROWS_AS(load_trials(temp_file("missing.jsonl")), Error);
}

TEST_CASE("session protocol and replay") {
  SessionConfig config;
  config.session_id = "abc123";
  config.scheme = Scheme::kRandomLetter;
  config.seed = 99;
  const auto path = temp_file("session.jsonl");
  SessionLogWriter writer(path, config.session_id);
  const auto created = Session::created_event(config, "t0");
  writer.append(created);
  Session live(created);
  auto commit = [&](const std::vector<nlohmann::json>& events) {
    for (const auto& e : events) {
      writer.append(e);
      live.apply(e);
    }
  };

  CHECK(live.phase() == Phase::kLearning);
  CHECK_THROWS_AS(live.plan_next_challenge("t"), Error);
  CHECK_THROWS_AS(live.plan_set_key(example_three_word_key(), "t"), Error);
  const SecretKey key = example_random_letter_key();
  commit(live.plan_set_key(key, "t1"));

  int practice = 0;
  int trial = 0;
  while (live.phase() != Phase::kClosed) {
    commit(live.plan_next_challenge("t"));
    const auto& open = *live.open_trial();
    if (open.day_index == 0) ++practice;
    CHECK(open.expected_password ==
          generate_password(key, Challenge::normalize(open.challenge)).value);
    if (trial % 5 == 1) commit(live.plan_hint(HintKind::kSecretKey, "t"));
    if (trial % 7 == 3) {
      for (int k = 0; k < 3; ++k) commit(live.plan_attempt("nope", {0, 1, 2, 3}, "t"));
    } else {
      std::vector<std::int64_t> ks;
      for (std::size_t i = 0; i < open.expected_password.size(); ++i) ks.push_back(400 * i);
      commit(live.plan_attempt(open.expected_password, ks, "t"));
    }
    ++trial;
    if (live.phase() == Phase::kFollowup && live.trials_in_phase() == 0) {
      commit(live.plan_recall("qfhcgbsklmnpjrdtnwxy", "t"));
    }
  }
  CHECK(practice == kPracticeTrials);
  CHECK(live.trials().size() == kPracticeTrials + 6 * kTrialsPerFollowup);
  CHECK(live.trials().back().day_index == 32);
  CHECK_THROWS_AS(live.plan_next_challenge("t"), Error);
  try {
    (void)live.plan_attempt("x", {}, "t");
    FAIL("expected TrialClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTrialClosed);
  }
  const auto state = live.state_json();
  CHECK(state.at("state") == "closed");
  CHECK(state.dump().find("expected_password") == std::string::npos);
  CHECK(state.dump().find("qfhcg") == std::string::npos);

  const auto replayed = Session::replay(read_session_log(path));
  CHECK(replayed.state_json() == state);
  CHECK(replayed.trials() == live.trials());

  const auto contents = read_session_log(path);
  const auto trials = trials_from_events(contents.events);
  CHECK(trials == live.trials());
  CHECK(recalls_from_events(contents.events).size() == live.recalls().size());
  fs::remove(path);
}

TEST_CASE("replay rejects tampered logs") {
  SessionConfig config;
  config.session_id = "t1";
  const auto created = Session::created_event(config, "t0");
  Session s(created);
  auto events = s.plan_set_key(example_three_word_key(), "t");
  s.apply(events[0]);
  auto issued = s.plan_next_challenge("t");
  s.apply(issued[0]);
  auto attempt = s.plan_attempt("wrong", {}, "t");
  attempt[0]["outcome"] = "success_on_1";
  CHECK_THROWS_AS(s.apply(attempt[0]), Error);
  CHECK_THROWS_AS(s.apply(nlohmann::json{{"type", "bogus"}}), Error);
  CHECK_THROWS_AS(Session(nlohmann::json{{"type", "trial"}}), Error);
}
