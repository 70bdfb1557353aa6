#pragma once

#include <string>
#include <vector>

#include "mindhash/challenge.hpp"
#include "mindhash/random.hpp"

namespace mindhash::study {

inline constexpr double kFrequentProbability = 0.75;

struct AccountSet {
  std::vector<std::string> frequent;
  std::vector<std::string> infrequent;
};

// The 25 synthetic website names; the first 15 are the frequent accounts.
AccountSet default_account_set();

// Frequent bucket with probability 0.75, then uniform within the bucket.
// An empty bucket is never chosen. Throws kInvalidArgument if both are empty.
Challenge sample_challenge(const AccountSet& set, Rng& rng);

}  // namespace mindhash::study
