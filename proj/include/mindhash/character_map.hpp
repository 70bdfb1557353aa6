#pragma once

#include <array>
#include <optional>

#include "mindhash/keys.hpp"
#include "mindhash/letter.hpp"

namespace mindhash {

// Total function from a..z to an output letter or "skip" (nullopt).
class CharacterMap {
 public:
  // Throws Error(kInvalidKey) when the key breaks its invariants.
  static CharacterMap from_key(const ThreeWordKey& key);
  static CharacterMap from_key(const RandomLetterKey& key);
  static CharacterMap from_key(const SecretKey& key);

  Scheme scheme() const { return scheme_; }
  std::optional<Letter> operator()(Letter l) const { return entries_[l.index()]; }

  bool operator==(const CharacterMap&) const = default;

 private:
  CharacterMap(Scheme scheme, const std::array<std::optional<Letter>, kAlphabetSize>& entries)
      : scheme_(scheme), entries_(entries) {}

  Scheme scheme_;
  std::array<std::optional<Letter>, kAlphabetSize> entries_;
};

// Letter -> first consonant strictly after its first occurrence in the word
// string (wrapping to the first consonant), or the wildcard when absent.
CharacterMap derive_three_word_map(const ThreeWordKey& key);

inline std::optional<Letter> map_letter(const CharacterMap& map, Letter l) { return map(l); }

}  // namespace mindhash
