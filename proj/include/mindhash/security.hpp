#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace mindhash::analysis {

struct KResult {
  int K = 0;
  // (1/21)^n * (1/26) * (1/10)^2 for the random-letter scheme.
  double guess_probability = 1.0;
};

// K is the largest i with guess_probability <= 10^-i.
KResult compute_k_random_letter(std::size_t n);

struct SecurityReport {
  std::optional<KResult> k;
  double q_estimate = 0.0;
  std::pair<double, double> q_ci{0.0, 0.0};
  double q_stddev = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string corpus_id;
};

nlohmann::json to_json(const SecurityReport& report);

}  // namespace mindhash::analysis
