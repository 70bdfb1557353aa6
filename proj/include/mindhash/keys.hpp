#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mindhash/letter.hpp"

namespace mindhash {

inline constexpr std::size_t kDefaultSpecialLength = 3;
inline constexpr std::size_t kMinDistinctLetters = 15;
// The random-letter map covers a..t; u..z are skipped.
inline constexpr std::size_t kRandomLetterDomain = 20;

enum class Scheme { kThreeWord, kRandomLetter };

std::string_view to_string(Scheme scheme);
Scheme scheme_from_string(std::string_view name);

// Composition rules a special string breaks; empty when it is acceptable.
std::vector<std::string> special_string_violations(std::string_view special,
                                                   std::size_t min_length = kDefaultSpecialLength);

struct ThreeWordKey {
  std::array<std::string, 3> words;
  Letter wildcard;
  std::string special;

  // The words with spaces elided, e.g. "adjustflightcomputer".
  std::string concatenated() const;

  bool operator==(const ThreeWordKey&) const = default;
};

struct RandomLetterKey {
  // Image of 'a' + i for i in [0, 20).
  std::array<Letter, kRandomLetterDomain> map;
  std::string special;

  bool operator==(const RandomLetterKey&) const = default;
};

using SecretKey = std::variant<ThreeWordKey, RandomLetterKey>;

Scheme scheme_of(const SecretKey& key);
const std::string& special_of(const SecretKey& key);

// Invariant violations of each key form; empty means the key is valid.
std::vector<std::string> key_violations(const ThreeWordKey& key);
std::vector<std::string> key_violations(const RandomLetterKey& key);
std::vector<std::string> key_violations(const SecretKey& key);

// The worked-example keys used throughout the documentation.
ThreeWordKey example_three_word_key();
RandomLetterKey example_random_letter_key();

}  // namespace mindhash
