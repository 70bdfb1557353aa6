#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mindhash/challenge.hpp"
#include "mindhash/letter.hpp"

namespace mindhash::analysis {

struct Observation {
  Challenge challenge;
  std::string response;
};

struct AttackOptions {
  // When set the attacker knows the wildcard; otherwise it is inferred.
  std::optional<Letter> known_wildcard;
};

// An ordered word triple (indices into the dictionary) and the wildcards
// still compatible with the observations.
struct Hypothesis {
  std::array<std::size_t, 3> words;
  std::bitset<kAlphabetSize> wildcards;
};

struct Guess {
  std::string response;
  double probability = 0.0;
  // False before any observation: the response then omits the special string.
  bool special_known = false;
};

// Enumerates every ordered triple over the dictionary that satisfies the
// 15-letter rule and keeps those whose derived map reproduces every observation.
class DictionaryAttack {
 public:
  // Throws kInvalidArgument for an empty or non-lowercase dictionary and
  // kNoConsistentKey when no triple survives.
  DictionaryAttack(std::vector<std::string> dictionary, std::span<const Observation> observations,
                   const AttackOptions& options = {});

  std::size_t consistent_key_count() const { return survivors_.size(); }
  const std::vector<Hypothesis>& survivors() const { return survivors_; }
  const std::vector<std::string>& dictionary() const { return dictionary_; }
  const std::optional<std::string>& special() const { return special_; }

  // Plurality response over surviving (triple, wildcard) hypotheses; each triple
  // carries equal weight split over its wildcards. Ties go to the smaller string.
  Guess predict(const Challenge& challenge) const;

 private:
  std::vector<std::string> dictionary_;
  std::vector<Hypothesis> survivors_;
  std::optional<std::string> special_;
};

}  // namespace mindhash::analysis
