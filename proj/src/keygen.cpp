#include "mindhash/keygen.hpp"

#include <algorithm>

#include "mindhash/random.hpp"

namespace mindhash::keygen {

LetterCoverage distinct_letter_count(std::string_view text) {
  LetterCoverage cov;
  for (char c : text) {
    if (is_lower_letter(c)) cov.used.set(static_cast<std::size_t>(c - 'a'));
  }
  cov.count = cov.used.count();
  return cov;
}

LetterCoverage distinct_letter_count(const std::array<std::string, 3>& words) {
  return distinct_letter_count(words[0] + words[1] + words[2]);
}

ValidationReport validate_three_word_key(const ThreeWordKey& key) {
  ValidationReport report;
  report.failures = key_violations(key);
  report.ok = report.failures.empty();
  const auto cov = distinct_letter_count(key.words);
  report.distinct_letters = cov.count;
  if (cov.contains(key.wildcard.value())) {
    report.warnings.push_back(std::string("wildcard '") + key.wildcard.value() +
                              "' also occurs in the words");
  }
  return report;
}

ValidationReport validate_random_letter_key(const RandomLetterKey& key) {
  ValidationReport report;
  report.failures = key_violations(key);
  report.ok = report.failures.empty();
  return report;
}

ValidationReport validate_key(const SecretKey& key) {
  return std::visit(
      [](const auto& k) {
        if constexpr (std::is_same_v<std::decay_t<decltype(k)>, ThreeWordKey>) {
          return validate_three_word_key(k);
        } else {
          return validate_random_letter_key(k);
        }
      },
      key);
}

namespace {

std::string special_from(Rng& rng) {
  std::uniform_int_distribution<int> upper(0, 25), digit(0, 9),
      symbol(0, static_cast<int>(kSpecialSymbols.size()) - 1);
  std::string s;
  s.push_back(static_cast<char>('A' + upper(rng)));
  s.push_back(static_cast<char>('0' + digit(rng)));
  s.push_back(kSpecialSymbols[static_cast<std::size_t>(symbol(rng))]);
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

}  // namespace

std::string sample_special_string(std::uint64_t seed) {
  auto rng = make_stream(seed, 1);
  return special_from(rng);
}

RandomLetterKey sample_random_letter_key(std::uint64_t seed) {
  auto rng = make_stream(seed);
  std::uniform_int_distribution<std::size_t> pick(0, kConsonantCount - 1);
  RandomLetterKey key;
  for (auto& image : key.map) image = Letter(kConsonants[pick(rng)]);
  key.special = special_from(rng);
  return key;
}

}  // namespace mindhash::keygen
