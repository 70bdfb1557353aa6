#include "mindhash/dictionary_attack.hpp"

#include <algorithm>
#include <map>

#include "mindhash/error.hpp"
#include "mindhash/keys.hpp"

namespace mindhash::analysis {
namespace {

// Map of the letters present in the word string; absent letters stay unset.
using PartialMap = std::array<char, kAlphabetSize>;

PartialMap present_letter_map(const std::string& s) {
  PartialMap map{};
  const auto first_consonant = s.find_first_not_of(kVowels);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto& slot = map[static_cast<std::size_t>(s[i] - 'a')];
    if (slot != 0) continue;
    auto next = s.find_first_not_of(kVowels, i + 1);
    if (next == std::string::npos) next = first_consonant;
    slot = s[next];
  }
  return map;
}

std::size_t distinct_letters(const std::string& s) {
  std::bitset<kAlphabetSize> seen;
  for (char c : s) seen.set(static_cast<std::size_t>(c - 'a'));
  return seen.count();
}

}  // namespace

DictionaryAttack::DictionaryAttack(std::vector<std::string> dictionary,
                                   std::span<const Observation> observations,
                                   const AttackOptions& options)
    : dictionary_(std::move(dictionary)) {
  if (dictionary_.empty()) throw Error(ErrorCode::kInvalidArgument, "dictionary is empty");
  for (const auto& w : dictionary_) {
    if (w.empty() || !std::all_of(w.begin(), w.end(), is_lower_letter)) {
      throw Error(ErrorCode::kInvalidArgument, "dictionary word \"" + w + "\" is not lowercase a-z");
    }
  }

  // Split every response into its mapped part and the special string; the
  // 3-word scheme never skips, so the mapped part has the challenge's length.
  std::vector<std::string_view> mapped;
  for (const auto& obs : observations) {
    const auto n = obs.challenge.size();
    if (obs.response.size() < n) {
      throw Error(ErrorCode::kNoConsistentKey, "response shorter than its challenge");
    }
    auto special = obs.response.substr(n);
    if (special_ && *special_ != special) {
      throw Error(ErrorCode::kNoConsistentKey, "observations disagree on the special string");
    }
    special_ = std::move(special);
    mapped.emplace_back(obs.response.data(), n);
  }

  std::bitset<kAlphabetSize> initial_wildcards;
  if (options.known_wildcard) {
    initial_wildcards.set(options.known_wildcard->index());
  } else {
    initial_wildcards.set();
  }

  const auto d = dictionary_.size();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const std::string s = dictionary_[i] + dictionary_[j] + dictionary_[k];
        if (distinct_letters(s) < kMinDistinctLetters) continue;
        const auto map = present_letter_map(s);
        auto wildcards = initial_wildcards;
        bool consistent = true;
        for (std::size_t o = 0; o < mapped.size() && consistent; ++o) {
          const auto& letters = observations[o].challenge.letters();
          for (std::size_t p = 0; p < letters.size(); ++p) {
            const char image = map[static_cast<std::size_t>(letters[p] - 'a')];
            const char seen = mapped[o][p];
            if (image != 0) {
              if (image != seen) {
                consistent = false;
                break;
              }
            } else {
              if (!is_lower_letter(seen)) {
                consistent = false;
                break;
              }
              const bool had = wildcards.test(static_cast<std::size_t>(seen - 'a'));
              wildcards.reset();
              if (had) wildcards.set(static_cast<std::size_t>(seen - 'a'));
              if (wildcards.none()) {
                consistent = false;
                break;
              }
            }
          }
        }
        if (consistent) survivors_.push_back({{i, j, k}, wildcards});
      }
    }
  }
  if (survivors_.empty()) {
    throw Error(ErrorCode::kNoConsistentKey, "no dictionary triple reproduces the observations");
  }
}

Guess DictionaryAttack::predict(const Challenge& challenge) const {
  std::map<std::string, double> tally;
  for (const auto& h : survivors_) {
    const auto map = present_letter_map(dictionary_[h.words[0]] + dictionary_[h.words[1]] +
                                        dictionary_[h.words[2]]);
    const bool needs_wildcard = std::any_of(
        challenge.letters().begin(), challenge.letters().end(),
        [&](char c) { return map[static_cast<std::size_t>(c - 'a')] == 0; });
    const auto wildcard_count = static_cast<double>(h.wildcards.count());
    for (std::size_t w = 0; w < kAlphabetSize; ++w) {
      if (!h.wildcards.test(w)) continue;
      std::string response;
      for (char c : challenge.letters()) {
        const char image = map[static_cast<std::size_t>(c - 'a')];
        response.push_back(image != 0 ? image : static_cast<char>('a' + w));
      }
      if (!needs_wildcard) {
        tally[response] += 1.0;
        break;
      }
      tally[response] += 1.0 / wildcard_count;
    }
  }

  // std::map iterates in lexicographic order, so strict > keeps the smaller string on ties.
  Guess best;
  double best_weight = -1.0;
  for (const auto& [response, weight] : tally) {
    if (weight > best_weight) {
      best_weight = weight;
      best.response = response;
    }
  }
  best.probability = best_weight / static_cast<double>(survivors_.size());
  if (special_) {
    best.response += *special_;
    best.special_known = true;
  }
  return best;
}

}  // namespace mindhash::analysis
