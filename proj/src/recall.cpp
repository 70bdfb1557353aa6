#include "mindhash/recall.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <vector>

namespace mindhash::study {
namespace {

std::vector<std::string> lowercase_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == ',' || c == ';') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

RecallScore score_words(const ThreeWordKey& key, std::string_view recalled) {
  auto tokens = lowercase_tokens(recalled);
  RecallScore score{0, 3};
  for (const auto& w : key.words) {
    auto it = std::find(tokens.begin(), tokens.end(), w);
    if (it != tokens.end()) {
      ++score.correct;
      tokens.erase(it);
    }
  }
  return score;
}

RecallScore score_map(const RandomLetterKey& key, std::string_view recalled) {
  std::array<std::optional<char>, kRandomLetterDomain> guess;
  const auto tokens = lowercase_tokens(recalled);

  auto only_letters = [](const std::string& t) {
    return std::all_of(t.begin(), t.end(), is_lower_letter);
  };
  if (tokens.size() == 1 && tokens[0].size() == kRandomLetterDomain && only_letters(tokens[0])) {
    for (std::size_t i = 0; i < kRandomLetterDomain; ++i) guess[i] = tokens[0][i];
  } else {
    for (auto t : tokens) {
      for (std::string_view sep : {"->", "=", ":"}) {
        if (auto p = t.find(sep); p != std::string::npos) t.erase(p, sep.size());
      }
      if (t.size() != 2 || !only_letters(t)) continue;
      const auto i = static_cast<std::size_t>(t[0] - 'a');
      if (i < kRandomLetterDomain && !guess[i]) guess[i] = t[1];
    }
  }

  RecallScore score{0, static_cast<int>(kRandomLetterDomain)};
  for (std::size_t i = 0; i < kRandomLetterDomain; ++i) {
    if (guess[i] && *guess[i] == key.map[i].value()) ++score.correct;
  }
  return score;
}

}  // namespace

RecallScore score_recall(const SecretKey& key, std::string_view recalled) {
  if (const auto* tw = std::get_if<ThreeWordKey>(&key)) return score_words(*tw, recalled);
  return score_map(std::get<RandomLetterKey>(key), recalled);
}

}  // namespace mindhash::study
