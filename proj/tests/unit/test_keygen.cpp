#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "mindhash/character_map.hpp"
#include "mindhash/error.hpp"
#include "mindhash/keygen.hpp"
#include "mindhash/mnemonic.hpp"

using namespace mindhash;
using namespace mindhash::keygen;

namespace {

std::vector<MnemonicEntry> example_table() {
  // Images follow the worked-example random-letter map.
  const std::array<const char*, 20> words = {"aqua",  "beef",  "chef",  "duck",  "egg",
                                             "fib",   "gas",   "hike",  "ill",   "jam",
                                             "knee",  "lap",   "mojo",  "nr",    "odd",
                                             "pat",   "qn",    "rw",    "sx",    "ty"};
  const std::string images = "qfhcgbsklmnpjrdtnwxy";
  std::vector<MnemonicEntry> t;
  for (std::size_t i = 0; i < 20; ++i) {
    t.push_back({Letter(static_cast<char>('a' + i)), Letter(images[i]), words[i]});
  }
  return t;
}

}  // namespace

TEST_CASE("distinct letter count") {
  CHECK(distinct_letter_count(std::array<std::string, 3>{"adjust", "flight", "computer"}).count == 17);
  CHECK(distinct_letter_count(std::array<std::string, 3>{"aaa", "aaa", "aaa"}).count == 1);
  CHECK(distinct_letter_count(std::array<std::string, 3>{"abcde", "fghij", "klmno"}).count == 15);
  CHECK(distinct_letter_count(std::array<std::string, 3>{"", "", ""}).count == 0);

  const auto cov = distinct_letter_count("adjust flight computer");
  for (char c : std::string("acdefghijlmoprstu")) CHECK(cov.contains(c));
  CHECK_FALSE(cov.contains('z'));
}

TEST_CASE("three-word key validation") {
  auto ok = validate_three_word_key(example_three_word_key());
  CHECK(ok.ok);
  CHECK(ok.failures.empty());
  CHECK(ok.distinct_letters == 17);
  CHECK(ok.warnings.empty());

  // c a t d o g p i = 8 distinct letters.
  auto few = validate_three_word_key({{"cat", "dog", "pig"}, Letter('x'), "B7!"});
  CHECK_FALSE(few.ok);
  CHECK(few.distinct_letters == 8);
  REQUIRE(few.failures.size() == 1);
  CHECK(few.failures[0].find("8 distinct") != std::string::npos);

  auto special = validate_three_word_key({{"adjust", "flight", "computer"}, Letter('x'), "abc"});
  CHECK_FALSE(special.ok);
  CHECK(special.failures.size() == 3);

  auto wildcard = validate_three_word_key({{"adjust", "flight", "computer"}, Letter('a'), "B7!"});
  CHECK(wildcard.ok);
  CHECK(wildcard.warnings.size() == 1);

  // The report agrees with the type invariants.
  for (const auto& words : std::vector<std::array<std::string, 3>>{
           {"adjust", "flight", "computer"}, {"cat", "dog", "pig"}, {"abcde", "fghij", "klmno"},
           {"abcde", "fghij", "klmn"}, {"", "flight", "computer"}}) {
    ThreeWordKey k{words, Letter('x'), "B7!"};
    CHECK(validate_three_word_key(k).ok == key_violations(k).empty());
  }
}

TEST_CASE("sampled random-letter keys") {
  CHECK(sample_random_letter_key(42) == sample_random_letter_key(42));
  CHECK_FALSE(sample_random_letter_key(42) == sample_random_letter_key(43));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto k = sample_random_letter_key(seed);
    CHECK(validate_random_letter_key(k).ok);
    CHECK(k.special.size() == 3);
    for (auto l : k.map) CHECK(l.is_consonant());
    CHECK(std::any_of(k.special.begin(), k.special.end(), [](char c) {
      return kSpecialSymbols.find(c) != std::string_view::npos;
    }));
  }
}

TEST_CASE("sampled images are uniform over the consonants") {
  constexpr int kSamples = 10000;
  std::array<int, 26> counts{};
  for (int s = 0; s < kSamples; ++s) counts[sample_random_letter_key(static_cast<std::uint64_t>(s)).map[0].index()]++;
  double chi2 = 0.0;
  const double expected = kSamples / 21.0;
  for (char c : kConsonants) {
    const double f = counts[static_cast<std::size_t>(c - 'a')] / static_cast<double>(kSamples);
    CHECK(std::abs(f - 1.0 / 21.0) < 0.01);
    const double d = counts[static_cast<std::size_t>(c - 'a')] - expected;
    chi2 += d * d / expected;
  }
  for (char v : kVowels) CHECK(counts[static_cast<std::size_t>(v - 'a')] == 0);
  // 20 degrees of freedom; 45.3 is the 0.999 quantile.
  CHECK(chi2 < 45.3);
}

TEST_CASE("mnemonic words") {
  CHECK(validate_mnemonic_word(Letter('a'), Letter('q'), "aqua"));
  CHECK(validate_mnemonic_word(Letter('b'), Letter('f'), "beef"));
  CHECK(validate_mnemonic_word(Letter('c'), Letter('h'), "chef"));
  CHECK(validate_mnemonic_word(Letter('d'), Letter('c'), "duck"));
  CHECK_FALSE(validate_mnemonic_word(Letter('c'), Letter('h'), "cat"));
  CHECK_FALSE(validate_mnemonic_word(Letter('a'), Letter('q'), "equa"));
  CHECK_FALSE(validate_mnemonic_word(Letter('a'), Letter('q'), "a"));
  CHECK_FALSE(validate_mnemonic_word(Letter('a'), Letter('q'), ""));
  CHECK(validate_mnemonic_word(Letter('e'), Letter('g'), "eggplant"));
}

TEST_CASE("valid mnemonic words agree with the next-consonant scan") {
  // A word used as a one-word string: the left letter's first occurrence is at
  // position 0, so the scan yields the same consonant the word encodes.
  const auto table = example_table();
  for (const auto& e : table) {
    REQUIRE(validate_mnemonic_word(e.left, e.right, e.word));
    const auto& w = e.word;
    auto next = w.find_first_not_of(kVowels, 1);
    REQUIRE(next != std::string::npos);
    CHECK(w[next] == e.right.value());
  }
}

TEST_CASE("key from mnemonic table") {
  const auto key = key_from_table(example_table(), "8*A");
  CHECK(key == example_random_letter_key());

  auto missing = example_table();
  missing.pop_back();
  CHECK_THROWS_AS(key_from_table(missing, "8*A"), Error);

  auto wrong = example_table();
  wrong[2].word = "cat";
  try {
    key_from_table(wrong, "8*A");
    FAIL("expected InvalidKey");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidKey);
  }
}

TEST_CASE("drills") {
  const auto table = example_table();
  const auto drills = build_drills(table, 9);
  REQUIRE(drills.size() == 60);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(drills[i].kind == DrillKind::kPairsToWord);
    CHECK(drills[20 + i].kind == DrillKind::kLetterToWordAndLetter);
    CHECK(drills[40 + i].kind == DrillKind::kShuffledLetterToWordAndLetter);
  }
  CHECK(drills[0].prompt == "a q");
  CHECK(drills[0].expected == std::vector<std::string>{"aqua"});
  CHECK(drills[20].prompt == "a");
  CHECK(drills[20].expected == std::vector<std::string>{"aqua", "q"});

  std::string order;
  std::set<std::string> prompts;
  for (std::size_t i = 40; i < 60; ++i) {
    order += drills[i].prompt;
    prompts.insert(drills[i].prompt);
  }
  CHECK(order != "abcdefghijklmnopqrst");
  CHECK(prompts.size() == 20);

  std::string again;
  for (std::size_t i = 40; i < 60; ++i) again += build_drills(table, 9)[i].prompt;
  CHECK(again == order);

  // Every seed avoids the identity order.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = build_drills(table, seed);
    std::string o;
    for (std::size_t i = 40; i < 60; ++i) o += d[i].prompt;
    CHECK(o != "abcdefghijklmnopqrst");
  }

  auto short_table = table;
  short_table.resize(19);
  try {
    build_drills(short_table, 1);
    FAIL("expected IncompleteTable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteTable);
  }
}

TEST_CASE("drill grading is case-insensitive and trimmed") {
  const auto drills = build_drills(example_table(), 3);
  const std::vector<std::string> good{"  AQUA ", "Q"};
  CHECK(grade_drill_response(drills[20], good));
  CHECK(grade_drill_response(drills[0], std::vector<std::string>{"Aqua"}));
  CHECK_FALSE(grade_drill_response(drills[20], std::vector<std::string>{"aqua"}));
  CHECK_FALSE(grade_drill_response(drills[20], std::vector<std::string>{"aqua", "p"}));
}

TEST_CASE("mnemonic table json") {
  const auto table = example_table();
  const auto j = mnemonic_table_to_json(table);
  CHECK(j[0] == nlohmann::json{{"left", "a"}, {"right", "q"}, {"word", "aqua"}});
  CHECK(mnemonic_table_from_json(j) == table);
  CHECK_THROWS_AS(mnemonic_table_from_json(nlohmann::json::object()), Error);
  CHECK_THROWS_AS(mnemonic_table_from_json(nlohmann::json::parse(R"([{"left":"A","right":"q","word":"x"}])")),
                  Error);
}
