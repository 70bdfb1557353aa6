// mindhash: command-line front end for password generation, key management,
// security analysis and the study harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mindhash/api.hpp"
#include "mindhash/challenge.hpp"
#include "mindhash/coverage.hpp"
#include "mindhash/dictionary_attack.hpp"
#include "mindhash/error.hpp"
#include "mindhash/hum.hpp"
#include "mindhash/key_io.hpp"
#include "mindhash/keygen.hpp"
#include "mindhash/metrics.hpp"
#include "mindhash/mnemonic.hpp"
#include "mindhash/password.hpp"
#include "mindhash/random.hpp"
#include "mindhash/security.hpp"
#include "mindhash/session.hpp"

#ifndef MINDHASH_DATA_DIR
#define MINDHASH_DATA_DIR "data"
#endif

namespace {

using namespace mindhash;
using nlohmann::json;

constexpr int kExitDomain = 1;

std::vector<std::string> read_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) words.push_back(w);
  }
  return words;
}

json report_json(const keygen::ValidationReport& r) {
  return {{"ok", r.ok},
          {"failures", r.failures},
          {"warnings", r.warnings},
          {"distinct_letters", r.distinct_letters}};
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

// Scripted participant: answers correctly except with probability error_rate
// per attempt, types at a few hundred ms per key, and sometimes presses hints.
json simulate_session(api::ApiService& service, Scheme scheme, const std::optional<SecretKey>& key,
                      std::uint64_t seed, double error_rate, double hint_rate) {
  json create{{"scheme", to_string(scheme)}, {"seed", seed}};
  auto created = service.handle({"POST", "/sessions", create, {}});
  if (created.status != 201) throw Error(ErrorCode::kInvalidState, created.body.dump());
  const auto id = created.body.at("session_id").get<std::string>();
  const auto base = "/sessions/" + id;

  json key_body = key ? json{{"key", key_to_json(*key)}} : json{{"generate", true}};
  auto set = service.handle({"POST", base + "/key", key_body, {}});
  if (set.status != 200) throw Error(ErrorCode::kInvalidKey, set.body.dump());
  const auto participant_key = service.snapshot(id)->key().value();

  auto rng = make_stream(seed, 77);
  std::bernoulli_distribution slip(error_rate), press(hint_rate);
  std::uniform_int_distribution<int> key_gap(150, 900);

  for (;;) {
    auto next = service.handle({"GET", base + "/next-challenge", json::object(), {}});
    if (next.status == 409) break;
    if (next.status != 200) throw Error(ErrorCode::kInvalidState, next.body.dump());
    const auto challenge = Challenge::normalize(next.body.at("challenge").get<std::string>());
    const auto password = generate_password(participant_key, challenge).value;
    if (press(rng)) service.handle({"POST", base + "/hints", {{"kind", "secret_key"}}, {}});
    for (int attempt = 0; attempt < study::kMaxAttempts; ++attempt) {
      std::string typed = password;
      if (slip(rng)) typed.back() = typed.back() == '#' ? '@' : '#';
      std::vector<std::int64_t> ks;
      std::int64_t t = 0;
      for (std::size_t i = 0; i < typed.size(); ++i) {
        ks.push_back(t);
        t += key_gap(rng);
      }
      auto r = service.handle(
          {"POST", base + "/attempts", {{"typed", typed}, {"keystroke_timestamps", ks}}, {}});
      if (r.status != 200) throw Error(ErrorCode::kInvalidState, r.body.dump());
      if (r.body.at("outcome") != "pending") break;
    }
  }
  return service.snapshot(id)->state_json();
}

int run(int argc, char** argv) {
  CLI::App app{"Humanly computable password schemes: generation, analysis and training"};
  app.require_subcommand(1);

  // keygen
  auto* keygen_cmd = app.add_subcommand("keygen", "Create a secret key file");
  std::string kg_scheme = "random-letter", kg_wildcard, kg_special, kg_out, kg_table;
  std::vector<std::string> kg_words;
  std::uint64_t kg_seed = 0;
  keygen_cmd->add_option("--scheme", kg_scheme)->check(CLI::IsMember({"three-word", "random-letter"}));
  keygen_cmd->add_option("--words", kg_words, "Three words (three-word scheme)")->expected(3);
  keygen_cmd->add_option("--wildcard", kg_wildcard);
  keygen_cmd->add_option("--special", kg_special, "Special string; sampled when omitted");
  keygen_cmd->add_option("--seed", kg_seed);
  keygen_cmd->add_option("--mnemonic-table", kg_table, "Derive a random-letter key from a table");
  keygen_cmd->add_option("--out", kg_out, "Write the key here instead of stdout");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a key file against the key rules");
  std::string v_key;
  validate_cmd->add_option("--key", v_key)->required();

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Compute the password for a challenge");
  std::string g_key, g_challenge;
  bool g_hum = false, g_strip = false, g_trunc = false;
  generate_cmd->add_option("--key", g_key)->required();
  generate_cmd->add_option("--challenge", g_challenge)->required();
  generate_cmd->add_flag("--hum", g_hum, "Also print the HUM cost");
  generate_cmd->add_flag("--strip-tld", g_strip, "Reduce a domain to its registrable label");
  generate_cmd->add_flag("--truncate5", g_trunc, "Use only the first five letters");

  // hum
  auto* hum_cmd = app.add_subcommand("hum", "HUM cost trace of the mental algorithm");
  std::size_t h_n = 0, h_s = 3;
  std::string h_scheme = "three-word";
  bool h_trace = false;
  hum_cmd->add_option("--n", h_n, "Challenge length")->required();
  hum_cmd->add_option("--special-len", h_s);
  hum_cmd->add_option("--scheme", h_scheme)->check(CLI::IsMember({"three-word", "random-letter"}));
  hum_cmd->add_flag("--trace", h_trace, "Print every step");

  // analyze-k
  auto* k_cmd = app.add_subcommand("analyze-k", "Security parameter K of the random-letter scheme");
  std::size_t k_n = 5;
  k_cmd->add_option("--n", k_n, "Challenge length");

  // analyze-q
  auto* q_cmd = app.add_subcommand("analyze-q", "Coverage estimate of Q over a challenge corpus");
  std::string q_corpus = std::string(MINDHASH_DATA_DIR) + "/top500_domains.txt", q_letters = "all";
  std::uint64_t q_samples = 100000, q_seed = 1;
  std::size_t q_n = 5;
  bool q_trunc = false;
  q_cmd->add_option("--corpus", q_corpus);
  q_cmd->add_option("--samples", q_samples)->check(CLI::PositiveNumber);
  q_cmd->add_option("--seed", q_seed);
  q_cmd->add_option("--n", q_n, "Challenge length for the K fields");
  q_cmd->add_option("--letters", q_letters, "Letters that must be covered")
      ->check(CLI::IsMember({"all", "a-t"}));
  q_cmd->add_flag("--truncate5", q_trunc);

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Dictionary attack on a three-word key");
  std::string a_dict, a_key, a_wildcard;
  std::vector<std::string> a_challenges, a_pairs, a_predict;
  attack_cmd->add_option("--dictionary", a_dict)->required();
  attack_cmd->add_option("--key", a_key, "Generate observations from this key");
  attack_cmd->add_option("--challenges", a_challenges, "Observed challenges (with --key)");
  attack_cmd->add_option("--observation", a_pairs, "challenge=response pair");
  attack_cmd->add_option("--wildcard", a_wildcard, "Wildcard known to the attacker");
  attack_cmd->add_option("--predict", a_predict, "Challenges to guess");

  // drill
  auto* drill_cmd = app.add_subcommand("drill", "Memorization drills for a mnemonic table");
  std::string d_table, d_log;
  std::uint64_t d_seed = 0;
  bool d_list = false;
  drill_cmd->add_option("--table", d_table)->required();
  drill_cmd->add_option("--seed", d_seed);
  drill_cmd->add_option("--log", d_log, "Append the transcript to this session log");
  drill_cmd->add_flag("--list", d_list, "Print the drill items as JSON instead of running them");

  // session
  auto* session_cmd = app.add_subcommand("session", "Replay or simulate a study session");
  std::string s_log, s_log_dir = "sessions", s_key, s_scheme = "random-letter";
  bool s_simulate = false;
  std::uint64_t s_seed = 1;
  double s_error = 0.05, s_hint = 0.2;
  session_cmd->add_option("--log", s_log, "Replay this log and print the state");
  session_cmd->add_flag("--simulate", s_simulate, "Run a scripted participant through the protocol");
  session_cmd->add_option("--log-dir", s_log_dir);
  session_cmd->add_option("--key", s_key);
  session_cmd->add_option("--scheme", s_scheme)->check(CLI::IsMember({"three-word", "random-letter"}));
  session_cmd->add_option("--seed", s_seed);
  session_cmd->add_option("--error-rate", s_error)->check(CLI::Range(0.0, 1.0));
  session_cmd->add_option("--hint-rate", s_hint)->check(CLI::Range(0.0, 1.0));

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Aggregate metrics over session logs");
  std::vector<std::string> m_logs;
  metrics_cmd->add_option("logs", m_logs)->required()->check(CLI::ExistingFile);

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API for the trainer");
  std::string sv_host = "127.0.0.1", sv_log_dir = "sessions", sv_static;
  int sv_port = 8080;
  std::optional<std::uint64_t> sv_seed;
  serve_cmd->add_option("--host", sv_host);
  serve_cmd->add_option("--port", sv_port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--log-dir", sv_log_dir);
  serve_cmd->add_option("--static-dir", sv_static, "Serve the trainer bundle from here");
  serve_cmd->add_option("--seed", sv_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*keygen_cmd) {
    SecretKey key;
    if (kg_scheme == "three-word") {
      if (kg_words.size() != 3 || kg_wildcard.size() != 1) {
        std::cerr << "keygen: three-word keys need --words w1 w2 w3 and --wildcard\n";
        return 2;
      }
      auto special = kg_special.empty() ? keygen::sample_special_string(kg_seed) : kg_special;
      key = ThreeWordKey{{kg_words[0], kg_words[1], kg_words[2]}, Letter(kg_wildcard[0]), special};
    } else if (!kg_table.empty()) {
      const auto table = keygen::load_mnemonic_table(kg_table);
      key = keygen::key_from_table(
          table, kg_special.empty() ? keygen::sample_special_string(kg_seed) : kg_special);
    } else {
      auto rl = keygen::sample_random_letter_key(kg_seed);
      if (!kg_special.empty()) rl.special = kg_special;
      key = rl;
    }
    const auto report = keygen::validate_key(key);
    if (!report.ok) {
      std::cerr << report_json(report).dump(2) << '\n';
      return kExitDomain;
    }
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    if (kg_out.empty()) {
      std::cout << key_to_json(key).dump(2) << '\n';
    } else {
      save_key(kg_out, key);
    }
    return 0;
  }

  if (*validate_cmd) {
    const auto report = keygen::validate_key(load_key(v_key));
    std::cout << report_json(report).dump(2) << '\n';
    return report.ok ? 0 : kExitDomain;
  }

  if (*generate_cmd) {
    const auto key = load_key(g_key);
    const auto challenge = Challenge::normalize(g_challenge, {g_strip, g_trunc});
    const auto password = generate_password(key, challenge);
    if (password.all_skipped) std::cerr << "warning: every challenge letter was skipped\n";
    std::cout << password.value << '\n';
    if (g_hum) {
      const auto trace = analysis::hum_trace(challenge.size(), special_of(key).size(), scheme_of(key));
      std::cout << "HUM=" << trace.total << '\n';
    }
    return 0;
  }

  if (*hum_cmd) {
    const auto trace = analysis::hum_trace(h_n, h_s, scheme_from_string(h_scheme));
    if (h_trace) {
      for (const auto& s : trace.steps) {
        std::cout << analysis::to_string(s.kind) << ' ' << s.cost << '\n';
      }
    }
    std::cout << "HUM=" << trace.total << '\n';
    return 0;
  }

  if (*k_cmd) {
    const auto k = analysis::compute_k_random_letter(k_n);
    std::cout << json{{"n", k_n}, {"K", k.K}, {"guess_probability", k.guess_probability}}.dump(2)
              << '\n';
    return 0;
  }

  if (*q_cmd) {
    NormalizeOptions opts;
    opts.truncate5 = q_trunc;
    const auto corpus = analysis::load_corpus(q_corpus, opts);
    analysis::CoverageOptions cov;
    if (q_letters == "a-t") cov.letter_mask = (1u << kRandomLetterDomain) - 1;
    auto report = analysis::estimate_q_coverage(corpus, q_samples, q_seed, cov);
    report.k = analysis::compute_k_random_letter(q_n);
    std::cout << analysis::to_json(report).dump(2) << '\n';
    return 0;
  }

  if (*attack_cmd) {
    std::vector<analysis::Observation> observations;
    if (!a_challenges.empty()) {
      if (a_key.empty()) {
        std::cerr << "attack: --challenges needs --key\n";
        return 2;
      }
      const auto key = load_key(a_key);
      for (const auto& c : a_challenges) {
        auto ch = Challenge::normalize(c);
        observations.push_back({ch, generate_password(key, ch).value});
      }
    }
    for (const auto& pair : a_pairs) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos) {
        std::cerr << "attack: --observation must be challenge=response\n";
        return 2;
      }
      observations.push_back({Challenge::normalize(pair.substr(0, eq)), pair.substr(eq + 1)});
    }
    analysis::AttackOptions options;
    if (!a_wildcard.empty()) options.known_wildcard = Letter(a_wildcard.at(0));
    const analysis::DictionaryAttack attack(read_word_list(a_dict), observations, options);
    json out{{"observations", observations.size()},
             {"consistent_key_count", attack.consistent_key_count()}};
    auto predictions = json::array();
    for (const auto& c : a_predict) {
      const auto g = attack.predict(Challenge::normalize(c));
      predictions.push_back({{"challenge", c},
                             {"guess", g.response},
                             {"probability", g.probability},
                             {"special_known", g.special_known}});
    }
    out["predictions"] = std::move(predictions);
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  if (*drill_cmd) {
    const auto table = keygen::load_mnemonic_table(d_table);
    const auto drills = keygen::build_drills(table, d_seed);
    if (d_list) {
      auto items = json::array();
      for (const auto& d : drills) {
        items.push_back({{"kind", keygen::to_string(d.kind)}, {"prompt", d.prompt}, {"expected", d.expected}});
      }
      std::cout << items.dump(2) << '\n';
      return 0;
    }
    auto transcript = json::array();
    std::size_t correct = 0;
    for (const auto& item : drills) {
      bool ok = false;
      int tries = 0;
      while (tries < keygen::kDrillTriesPerItem && !ok) {
        std::cout << '[' << keygen::to_string(item.kind) << "] " << item.prompt << " > " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) break;
        ++tries;
        ok = keygen::grade_drill_response(item, split_ws(line));
        if (!ok && tries < keygen::kDrillTriesPerItem) std::cout << "try again\n";
      }
      if (!ok) {
        std::cout << "answer:";
        for (const auto& e : item.expected) std::cout << ' ' << e;
        std::cout << '\n';
      }
      correct += ok ? 1 : 0;
      transcript.push_back({{"kind", keygen::to_string(item.kind)}, {"prompt", item.prompt},
                            {"tries", tries}, {"correct", ok}});
      if (tries == 0) break;
    }
    std::cout << correct << '/' << drills.size() << " correct\n";
    if (!d_log.empty()) {
      const auto header = study::read_session_log(d_log).header;
      study::SessionLogWriter writer(d_log, header.value("session_id", ""));
      writer.append({{"type", "drill"}, {"transcript", transcript}, {"at", study::iso_now()}});
    }
    return 0;
  }

  if (*session_cmd) {
    if (s_simulate) {
      std::optional<SecretKey> key;
      if (!s_key.empty()) key = load_key(s_key);
      const auto scheme = key ? scheme_of(*key) : scheme_from_string(s_scheme);
      api::ApiService service(s_log_dir, api::ApiOptions{s_seed, {}, {}});
      std::cout << simulate_session(service, scheme, key, s_seed, s_error, s_hint).dump(2) << '\n';
      return 0;
    }
    if (s_log.empty()) {
      std::cerr << "session: give --log to replay or --simulate\n";
      return 2;
    }
    const auto session = study::Session::replay(study::read_session_log(s_log));
    std::cout << session.state_json().dump(2) << '\n';
    return 0;
  }

  if (*metrics_cmd) {
    std::vector<study::TrialRecord> trials;
    std::vector<study::RecallRecord> recalls;
    for (const auto& path : m_logs) {
      const auto log = study::read_session_log(path);
      auto t = study::trials_from_events(log.events);
      auto r = study::recalls_from_events(log.events);
      trials.insert(trials.end(), t.begin(), t.end());
      recalls.insert(recalls.end(), r.begin(), r.end());
    }
    std::cout << study::to_json(study::aggregate_metrics(trials, recalls)).dump(2) << '\n';
    return 0;
  }

  if (*serve_cmd) {
    api::ApiService service(sv_log_dir, api::ApiOptions{sv_seed, {}, {}});
    std::optional<std::filesystem::path> static_dir;
    if (!sv_static.empty()) static_dir = sv_static;
    api::HttpServer server(service, static_dir);
    std::cerr << "listening on " << sv_host << ':' << sv_port << " (logs in " << sv_log_dir << ")\n";
    if (!server.listen(sv_host, sv_port)) {
      std::cerr << "serve: cannot listen on " << sv_host << ':' << sv_port << '\n';
      return kExitDomain;
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mindhash::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
