#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mindhash/challenge.hpp"
#include "mindhash/security.hpp"

namespace mindhash::analysis {

struct Corpus {
  std::vector<Challenge> challenges;
  // Positive sampling weights, one per challenge; uniform when absent.
  std::optional<std::vector<double>> weights;
  std::string id;
};

// One domain per line; '#' starts a comment. Each line is reduced to its
// registrable label before normalization. A "# corpus_id: X" comment sets id.
Corpus load_corpus(const std::filesystem::path& path, const NormalizeOptions& options = {});
Corpus make_corpus(const std::vector<std::string>& names, std::string id = "inline",
                   const NormalizeOptions& options = {});

struct CoverageOptions {
  // Bit i set: letter 'a'+i must be covered. Defaults to the full alphabet.
  std::uint32_t letter_mask = (1u << 26) - 1;
};

// Monte Carlo estimate of the expected number of observed challenges (uniform,
// with replacement) until every letter of an independently drawn target is
// covered. Trial t draws from make_stream(seed, t). Fills the Q fields only.
SecurityReport estimate_q_coverage(const Corpus& corpus, std::uint64_t samples,
                                   std::uint64_t seed, const CoverageOptions& options = {});

}  // namespace mindhash::analysis
