#include "mindhash/security.hpp"

#include <cmath>

namespace mindhash::analysis {

KResult compute_k_random_letter(std::size_t n) {
  KResult r;
  // 21^n * 2600 is exact in a double up to n = 10; long double keeps the
  // division accurate past that.
  long double denom = 2600.0L;
  for (std::size_t i = 0; i < n; ++i) denom *= 21.0L;
  r.guess_probability = static_cast<double>(1.0L / denom);

  // floor(log10(denom)) with an exact boundary check: 10^K <= denom.
  int k = static_cast<int>(std::floor(std::log10(denom)));
  while (std::pow(10.0L, k + 1) <= denom) ++k;
  while (k > 0 && std::pow(10.0L, k) > denom) --k;
  r.K = k;
  return r;
}

nlohmann::json to_json(const SecurityReport& report) {
  nlohmann::json j;
  if (report.k) {
    j["K"] = report.k->K;
    j["guess_probability"] = report.k->guess_probability;
  } else {
    j["K"] = nullptr;
    j["guess_probability"] = nullptr;
  }
  j["Q_estimate"] = report.q_estimate;
  j["Q_ci"] = {report.q_ci.first, report.q_ci.second};
  j["Q_stddev"] = report.q_stddev;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["corpus_id"] = report.corpus_id;
  return j;
}

}  // namespace mindhash::analysis
