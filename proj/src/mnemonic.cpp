#include "mindhash/mnemonic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>

#include "mindhash/error.hpp"
#include "mindhash/random.hpp"

namespace mindhash::keygen {
namespace {

std::string normalize_answer(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(begin, end - begin + 1));
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Table rows indexed by left letter; throws unless every a..t appears exactly once.
std::array<const MnemonicEntry*, kRandomLetterDomain> index_table(
    std::span<const MnemonicEntry> table) {
  std::array<const MnemonicEntry*, kRandomLetterDomain> rows{};
  for (const auto& e : table) {
    const auto i = e.left.index();
    if (i >= kRandomLetterDomain) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("mnemonic left letter out of range: ") + e.left.value());
    }
    if (rows[i] != nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate mnemonic row for ") + e.left.value());
    }
    rows[i] = &e;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == nullptr) {
      throw Error(ErrorCode::kIncompleteTable,
                  std::string("no mnemonic row for ") + static_cast<char>('a' + i));
    }
  }
  return rows;
}

}  // namespace

std::optional<Letter> mnemonic_target(std::string_view word) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (is_consonant(word[i])) return Letter(word[i]);
  }
  return std::nullopt;
}

bool validate_mnemonic_word(Letter left, Letter right, std::string_view word) {
  if (word.empty() || word.front() != left.value()) return false;
  auto target = mnemonic_target(word);
  return target && *target == right;
}

RandomLetterKey key_from_table(std::span<const MnemonicEntry> table, std::string special) {
  const auto rows = index_table(table);
  RandomLetterKey key;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!validate_mnemonic_word(rows[i]->left, rows[i]->right, rows[i]->word)) {
      throw Error(ErrorCode::kInvalidKey, "word \"" + rows[i]->word + "\" does not encode " +
                                              rows[i]->left.value() + "->" +
                                              rows[i]->right.value());
    }
    key.map[i] = rows[i]->right;
  }
  key.special = std::move(special);
  return key;
}

std::string_view to_string(DrillKind kind) {
  switch (kind) {
    case DrillKind::kPairsToWord: return "pairs_to_word";
    case DrillKind::kLetterToWordAndLetter: return "letter_to_word_and_letter";
    case DrillKind::kShuffledLetterToWordAndLetter: return "shuffled_letter_to_word_and_letter";
  }
  return "unknown";
}

std::vector<DrillItem> build_drills(std::span<const MnemonicEntry> table, std::uint64_t seed) {
  if (table.size() < kRandomLetterDomain) {
    throw Error(ErrorCode::kIncompleteTable, "mnemonic table has " + std::to_string(table.size()) +
                                                 " rows, need " +
                                                 std::to_string(kRandomLetterDomain));
  }
  const auto rows = index_table(table);

  std::vector<DrillItem> drills;
  drills.reserve(3 * rows.size());
  for (const auto* e : rows) {
    drills.push_back({DrillKind::kPairsToWord,
                      std::string{e->left.value(), ' ', e->right.value()},
                      {e->word}});
  }
  for (const auto* e : rows) {
    drills.push_back({DrillKind::kLetterToWordAndLetter, std::string(1, e->left.value()),
                      {e->word, std::string(1, e->right.value())}});
  }

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  auto rng = make_stream(seed);
  do {
    std::shuffle(order.begin(), order.end(), rng);
  } while (std::is_sorted(order.begin(), order.end()));
  for (auto i : order) {
    const auto* e = rows[i];
    drills.push_back({DrillKind::kShuffledLetterToWordAndLetter, std::string(1, e->left.value()),
                      {e->word, std::string(1, e->right.value())}});
  }
  return drills;
}

bool grade_drill_response(const DrillItem& item, std::span<const std::string> answers) {
  if (answers.size() != item.expected.size()) return false;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (normalize_answer(answers[i]) != normalize_answer(item.expected[i])) return false;
  }
  return true;
}

std::vector<MnemonicEntry> mnemonic_table_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "mnemonic table must be a JSON array");
  std::vector<MnemonicEntry> table;
  for (const auto& row : j) {
    try {
      const auto left = row.at("left").get<std::string>();
      const auto right = row.at("right").get<std::string>();
      if (left.size() != 1 || right.size() != 1) {
        throw Error(ErrorCode::kParse, "left/right must be single letters");
      }
      auto l = Letter::from_char(left[0]);
      auto r = Letter::from_char(right[0]);
      if (!l || !r) throw Error(ErrorCode::kParse, "left/right must be lowercase letters");
      table.push_back({*l, *r, row.at("word").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  return table;
}

nlohmann::json mnemonic_table_to_json(std::span<const MnemonicEntry> table) {
  auto j = nlohmann::json::array();
  for (const auto& e : table) {
    j.push_back({{"left", std::string(1, e.left.value())},
                 {"right", std::string(1, e.right.value())},
                 {"word", e.word}});
  }
  return j;
}

std::vector<MnemonicEntry> load_mnemonic_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open mnemonic table " + path.string());
  try {
    return mnemonic_table_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace mindhash::keygen
