#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindhash/challenge.hpp"
#include "mindhash/coverage.hpp"
#include "mindhash/dictionary_attack.hpp"
#include "mindhash/error.hpp"
#include "mindhash/hum.hpp"
#include "mindhash/key_io.hpp"
#include "mindhash/keygen.hpp"
#include "mindhash/metrics.hpp"
#include "mindhash/password.hpp"
#include "mindhash/recall.hpp"
#include "mindhash/schedule.hpp"
#include "mindhash/security.hpp"
#include "mindhash/session_log.hpp"

namespace py = pybind11;
using namespace mindhash;

namespace {

// Keys cross the boundary as JSON text in the key-file format.
SecretKey parse_key(const std::string& key_json) {
  return key_from_json(nlohmann::json::parse(key_json));
}

}  // namespace

PYBIND11_MODULE(_mindhash, m) {
  m.doc() = "Humanly computable password schemes (C++ core)";

  py::register_exception<Error>(m, "MindhashError", PyExc_ValueError);

  m.def("normalize_challenge",
        [](const std::string& raw, bool strip_tld, bool truncate5) {
          return Challenge::normalize(raw, {strip_tld, truncate5}).letters();
        },
        py::arg("raw"), py::arg("strip_tld") = false, py::arg("truncate5") = false);

  m.def("generate_password",
        [](const std::string& key_json, const std::string& challenge, bool strip_tld, bool truncate5) {
          return generate_password(parse_key(key_json),
                                   Challenge::normalize(challenge, {strip_tld, truncate5}))
              .value;
        },
        py::arg("key_json"), py::arg("challenge"), py::arg("strip_tld") = false,
        py::arg("truncate5") = false);

  m.def("character_map",
        [](const std::string& key_json) {
          const auto map = CharacterMap::from_key(parse_key(key_json));
          std::map<std::string, std::optional<std::string>> out;
          for (char c : kAlphabet) {
            auto v = map(Letter(c));
            out[std::string(1, c)] = v ? std::optional<std::string>(std::string(1, v->value())) : std::nullopt;
          }
          return out;
        },
        "Letter -> output letter, None for skipped letters");

  m.def("distinct_letter_count",
        [](const std::string& text) { return keygen::distinct_letter_count(text).count; });

  m.def("validate_key", [](const std::string& key_json) {
    const auto r = keygen::validate_key(parse_key(key_json));
    return py::dict(py::arg("ok") = r.ok, py::arg("failures") = r.failures,
                    py::arg("warnings") = r.warnings, py::arg("distinct_letters") = r.distinct_letters);
  });

  m.def("sample_random_letter_key",
        [](std::uint64_t seed) { return key_to_json(keygen::sample_random_letter_key(seed)).dump(); },
        py::arg("seed"));

  m.def("hum_trace", [](std::size_t n, std::size_t special_len) {
    std::vector<std::pair<std::string, int>> steps;
    for (const auto& s : analysis::hum_trace(n, special_len).steps) {
      steps.emplace_back(std::string(analysis::to_string(s.kind)), s.cost);
    }
    return steps;
  });
  m.def("hum_total", [](std::size_t n, std::size_t special_len) {
    return analysis::hum_trace(n, special_len).total;
  });

  m.def("compute_k", [](std::size_t n) {
    const auto k = analysis::compute_k_random_letter(n);
    return py::dict(py::arg("n") = n, py::arg("K") = k.K,
                    py::arg("guess_probability") = k.guess_probability);
  });

  m.def("estimate_q",
        [](const std::vector<std::string>& names, std::uint64_t samples, std::uint64_t seed) {
          const auto r = analysis::estimate_q_coverage(analysis::make_corpus(names), samples, seed);
          return analysis::to_json(r).dump();
        },
        py::arg("names"), py::arg("samples"), py::arg("seed") = 0);
  m.def("estimate_q_file",
        [](const std::string& path, std::uint64_t samples, std::uint64_t seed) {
          const auto r = analysis::estimate_q_coverage(analysis::load_corpus(path), samples, seed);
          return analysis::to_json(r).dump();
        },
        py::arg("path"), py::arg("samples"), py::arg("seed") = 0);

  m.def("dictionary_attack",
        [](const std::vector<std::string>& dictionary,
           const std::vector<std::pair<std::string, std::string>>& observations,
           std::optional<std::string> wildcard, const std::vector<std::string>& predict) {
          std::vector<analysis::Observation> obs;
          for (const auto& [c, r] : observations) obs.push_back({Challenge::normalize(c), r});
          analysis::AttackOptions options;
          if (wildcard) {
            auto w = wildcard->size() == 1 ? Letter::from_char((*wildcard)[0]) : std::nullopt;
            if (!w) throw Error(ErrorCode::kInvalidArgument, "wildcard must be one lowercase letter");
            options.known_wildcard = *w;
          }
          const analysis::DictionaryAttack attack(dictionary, obs, options);
          py::list guesses;
          for (const auto& c : predict) {
            const auto g = attack.predict(Challenge::normalize(c));
            guesses.append(py::dict(py::arg("challenge") = c, py::arg("guess") = g.response,
                                    py::arg("probability") = g.probability,
                                    py::arg("special_known") = g.special_known));
          }
          return py::dict(py::arg("consistent_key_count") = attack.consistent_key_count(),
                          py::arg("predictions") = guesses);
        },
        py::arg("dictionary"), py::arg("observations"), py::arg("wildcard") = std::nullopt,
        py::arg("predict") = std::vector<std::string>{});

  m.def("score_recall", [](const std::string& key_json, const std::string& text) {
    const auto s = study::score_recall(parse_key(key_json), text);
    return std::make_pair(s.correct, s.total);
  });

  m.def("followup_schedule", [](const std::string& start) {
    auto d = study::parse_iso_date(start);
    if (!d) throw Error(ErrorCode::kInvalidArgument, "start must be YYYY-MM-DD");
    py::list out;
    for (const auto& w : study::followup_schedule(*d)) {
      out.append(py::dict(py::arg("day_index") = w.day_index, py::arg("opens") = study::iso_date(w.opens),
                          py::arg("closes") = study::iso_date(w.closes)));
    }
    return out;
  });

  m.def("metrics_from_logs", [](const std::vector<std::string>& paths) {
    std::vector<study::TrialRecord> trials;
    std::vector<study::RecallRecord> recalls;
    for (const auto& p : paths) {
      const auto log = study::read_session_log(p);
      auto t = study::trials_from_events(log.events);
      auto r = study::recalls_from_events(log.events);
      trials.insert(trials.end(), t.begin(), t.end());
      recalls.insert(recalls.end(), r.begin(), r.end());
    }
    return study::to_json(study::aggregate_metrics(trials, recalls)).dump();
  });
}
