#include "mindhash/keys.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>

#include "mindhash/error.hpp"

namespace mindhash {

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::kThreeWord ? "three-word" : "random-letter";
}

Scheme scheme_from_string(std::string_view name) {
  if (name == "three-word") return Scheme::kThreeWord;
  if (name == "random-letter") return Scheme::kRandomLetter;
  throw Error(ErrorCode::kParse, "unknown scheme \"" + std::string(name) + "\"");
}

std::vector<std::string> special_string_violations(std::string_view special,
                                                   std::size_t min_length) {
  std::vector<std::string> out;
  auto any = [&](auto pred) {
    return std::any_of(special.begin(), special.end(),
                       [&](char c) { return pred(static_cast<unsigned char>(c)); });
  };
  if (special.size() < min_length) {
    out.push_back("special string shorter than " + std::to_string(min_length) + " characters");
  }
  if (!any([](unsigned char c) { return std::isupper(c) != 0; })) {
    out.push_back("special string has no uppercase letter");
  }
  if (!any([](unsigned char c) { return std::isdigit(c) != 0; })) {
    out.push_back("special string has no digit");
  }
  if (!any([](unsigned char c) { return std::isgraph(c) != 0 && std::isalnum(c) == 0; })) {
    out.push_back("special string has no non-alphanumeric character");
  }
  return out;
}

std::string ThreeWordKey::concatenated() const { return words[0] + words[1] + words[2]; }

Scheme scheme_of(const SecretKey& key) {
  return std::holds_alternative<ThreeWordKey>(key) ? Scheme::kThreeWord : Scheme::kRandomLetter;
}

const std::string& special_of(const SecretKey& key) {
  return std::visit([](const auto& k) -> const std::string& { return k.special; }, key);
}

std::vector<std::string> key_violations(const ThreeWordKey& key) {
  std::vector<std::string> out;
  std::bitset<kAlphabetSize> seen;
  for (std::size_t i = 0; i < key.words.size(); ++i) {
    const auto& w = key.words[i];
    if (w.empty()) {
      out.push_back("word " + std::to_string(i + 1) + " is empty");
      continue;
    }
    if (!std::all_of(w.begin(), w.end(), is_lower_letter)) {
      out.push_back("word " + std::to_string(i + 1) + " is not lowercase a-z");
      continue;
    }
    for (char c : w) seen.set(static_cast<std::size_t>(c - 'a'));
  }
  if (seen.count() < kMinDistinctLetters) {
    out.push_back("words contain " + std::to_string(seen.count()) + " distinct letters, need " +
                  std::to_string(kMinDistinctLetters));
  }
  auto special = special_string_violations(key.special);
  out.insert(out.end(), special.begin(), special.end());
  return out;
}

std::vector<std::string> key_violations(const RandomLetterKey& key) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < key.map.size(); ++i) {
    if (!key.map[i].is_consonant()) {
      out.push_back(std::string("map entry ") + static_cast<char>('a' + i) + " -> " +
                    key.map[i].value() + " is not a consonant");
    }
  }
  auto special = special_string_violations(key.special);
  out.insert(out.end(), special.begin(), special.end());
  return out;
}

std::vector<std::string> key_violations(const SecretKey& key) {
  return std::visit([](const auto& k) { return key_violations(k); }, key);
}

ThreeWordKey example_three_word_key() {
  return ThreeWordKey{{"adjust", "flight", "computer"}, Letter('x'), "B7!"};
}

RandomLetterKey example_random_letter_key() {
  constexpr std::string_view images = "qfhcgbsklmnpjrdtnwxy";
  RandomLetterKey key;
  for (std::size_t i = 0; i < images.size(); ++i) key.map[i] = Letter(images[i]);
  key.special = "8*A";
  return key;
}

}  // namespace mindhash
