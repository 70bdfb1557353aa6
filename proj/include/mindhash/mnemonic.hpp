#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mindhash/keys.hpp"
#include "mindhash/letter.hpp"

namespace mindhash::keygen {

// One row of the "memorize with words" table: (a, q, "aqua").
struct MnemonicEntry {
  Letter left;
  Letter right;
  std::string word;

  bool operator==(const MnemonicEntry&) const = default;
};

// word starts with left and its first consonant after position 0 is right.
bool validate_mnemonic_word(Letter left, Letter right, std::string_view word);

// The consonant a word encodes, or nullopt when it has none after position 0.
std::optional<Letter> mnemonic_target(std::string_view word);

// Letter map recovered from a complete 20-row table; throws kIncompleteTable / kInvalidKey.
RandomLetterKey key_from_table(std::span<const MnemonicEntry> table, std::string special);

enum class DrillKind {
  kPairsToWord,                     // show "a q", type the word
  kLetterToWordAndLetter,           // show "a", type word then right letter
  kShuffledLetterToWordAndLetter,   // as above, letters out of order
};

std::string_view to_string(DrillKind kind);

struct DrillItem {
  DrillKind kind;
  std::string prompt;
  std::vector<std::string> expected;
};

// Three passes of 20 items; the third pass uses a seeded non-identity shuffle.
std::vector<DrillItem> build_drills(std::span<const MnemonicEntry> table, std::uint64_t seed);

// Case-insensitive, whitespace-trimmed comparison against every expected answer.
bool grade_drill_response(const DrillItem& item, std::span<const std::string> answers);

inline constexpr int kDrillTriesPerItem = 2;

std::vector<MnemonicEntry> mnemonic_table_from_json(const nlohmann::json& j);
nlohmann::json mnemonic_table_to_json(std::span<const MnemonicEntry> table);
std::vector<MnemonicEntry> load_mnemonic_table(const std::filesystem::path& path);

}  // namespace mindhash::keygen
