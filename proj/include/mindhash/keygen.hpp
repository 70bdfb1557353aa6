#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mindhash/keys.hpp"

namespace mindhash::keygen {

// Symbols drawn for the non-alphanumeric position of a sampled special string.
inline constexpr std::string_view kSpecialSymbols = "!@#$%^&*?+";

struct LetterCoverage {
  std::bitset<kAlphabetSize> used;
  std::size_t count = 0;

  bool contains(char c) const { return used.test(static_cast<std::size_t>(c - 'a')); }
};

// Letters used across the concatenated words; non-letters are ignored.
LetterCoverage distinct_letter_count(const std::array<std::string, 3>& words);
LetterCoverage distinct_letter_count(std::string_view text);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  // Advisory only, e.g. a wildcard that also occurs in the words.
  std::vector<std::string> warnings;
  std::size_t distinct_letters = 0;
};

ValidationReport validate_three_word_key(const ThreeWordKey& key);
ValidationReport validate_random_letter_key(const RandomLetterKey& key);
ValidationReport validate_key(const SecretKey& key);

// Uniform special string: one uppercase letter, one digit, one symbol, shuffled.
std::string sample_special_string(std::uint64_t seed);

// Every image of a..t is uniform over the 21 consonants, with replacement.
RandomLetterKey sample_random_letter_key(std::uint64_t seed);

}  // namespace mindhash::keygen
