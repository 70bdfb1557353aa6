#include "mindhash/character_map.hpp"

#include <string>

#include "mindhash/error.hpp"

namespace mindhash {
namespace {

void require_valid(const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += v;
  }
  throw Error(ErrorCode::kInvalidKey, msg);
}

}  // namespace

CharacterMap derive_three_word_map(const ThreeWordKey& key) { return CharacterMap::from_key(key); }

CharacterMap CharacterMap::from_key(const ThreeWordKey& key) {
  require_valid(key_violations(key));
  const std::string s = key.concatenated();
  // A valid key has at least 15 distinct letters, so at least 10 consonants.
  const auto first_consonant = s.find_first_not_of(kVowels);

  std::array<std::optional<Letter>, kAlphabetSize> entries;
  entries.fill(key.wildcard);
  for (char c : kAlphabet) {
    const auto first = s.find(c);
    if (first == std::string::npos) continue;
    auto next = s.find_first_not_of(kVowels, first + 1);
    if (next == std::string::npos) next = first_consonant;
    entries[static_cast<std::size_t>(c - 'a')] = Letter(s[next]);
  }
  return CharacterMap(Scheme::kThreeWord, entries);
}

CharacterMap CharacterMap::from_key(const RandomLetterKey& key) {
  require_valid(key_violations(key));
  std::array<std::optional<Letter>, kAlphabetSize> entries{};
  for (std::size_t i = 0; i < key.map.size(); ++i) entries[i] = key.map[i];
  return CharacterMap(Scheme::kRandomLetter, entries);
}

CharacterMap CharacterMap::from_key(const SecretKey& key) {
  return std::visit([](const auto& k) { return CharacterMap::from_key(k); }, key);
}

}  // namespace mindhash
