#include "mindhash/accounts.hpp"

#include "mindhash/error.hpp"

namespace mindhash::study {

AccountSet default_account_set() {
  return AccountSet{
      {"kite", "pillow", "atlantic", "bundle", "reverse", "family", "quebec", "cough", "subject",
       "mug", "spike", "fishing", "jumper", "knob", "chord"},
      {"quiz", "fixed", "world", "campaign", "warm", "navy", "banquet", "hazy", "chef", "twist"},
  };
}

Challenge sample_challenge(const AccountSet& set, Rng& rng) {
  if (set.frequent.empty() && set.infrequent.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "account set is empty");
  }
  bool frequent = !set.frequent.empty();
  if (frequent && !set.infrequent.empty()) {
    frequent = std::bernoulli_distribution(kFrequentProbability)(rng);
  }
  const auto& bucket = frequent ? set.frequent : set.infrequent;
  std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
  return Challenge::normalize(bucket[pick(rng)]);
}

}  // namespace mindhash::study
