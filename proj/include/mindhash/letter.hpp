#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>

namespace mindhash {

inline constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz";
inline constexpr std::string_view kVowels = "aeiou";
// y counts as a consonant.
inline constexpr std::string_view kConsonants = "bcdfghjklmnpqrstvwxyz";
inline constexpr std::size_t kAlphabetSize = 26;
inline constexpr std::size_t kConsonantCount = 21;

constexpr bool is_lower_letter(char c) { return c >= 'a' && c <= 'z'; }
constexpr bool is_vowel(char c) { return kVowels.find(c) != std::string_view::npos; }
constexpr bool is_consonant(char c) { return is_lower_letter(c) && !is_vowel(c); }

// A single lowercase letter a-z.
class Letter {
 public:
  constexpr Letter() = default;

  // Throws Error(kInvalidArgument) for anything outside a-z.
  explicit Letter(char c);

  static constexpr std::optional<Letter> from_char(char c) {
    if (!is_lower_letter(c)) return std::nullopt;
    Letter l;
    l.value_ = c;
    return l;
  }

  constexpr char value() const { return value_; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(value_ - 'a'); }
  constexpr bool is_vowel() const { return mindhash::is_vowel(value_); }
  constexpr bool is_consonant() const { return !is_vowel(); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  char value_ = 'a';
};

}  // namespace mindhash
