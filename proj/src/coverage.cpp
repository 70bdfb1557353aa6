#include "mindhash/coverage.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "mindhash/error.hpp"
#include "mindhash/random.hpp"

namespace mindhash::analysis {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint32_t letter_bits(const Challenge& c) {
  std::uint32_t bits = 0;
  for (char ch : c.letters()) bits |= 1u << (ch - 'a');
  return bits;
}

}  // namespace

Corpus make_corpus(const std::vector<std::string>& names, std::string id,
                   const NormalizeOptions& options) {
  Corpus corpus;
  corpus.id = std::move(id);
  for (const auto& name : names) corpus.challenges.push_back(Challenge::normalize(name, options));
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, const NormalizeOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open corpus " + path.string());
  Corpus corpus;
  corpus.id = path.stem().string();
  NormalizeOptions opts = options;
  opts.strip_tld = true;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      auto comment = trim(std::string_view(line).substr(hash + 1));
      constexpr std::string_view tag = "corpus_id:";
      if (comment.rfind(tag, 0) == 0) corpus.id = trim(std::string_view(comment).substr(tag.size()));
      line.erase(hash);
    }
    auto name = trim(line);
    if (name.empty()) continue;
    corpus.challenges.push_back(Challenge::normalize(name, opts));
  }
  return corpus;
}

SecurityReport estimate_q_coverage(const Corpus& corpus, std::uint64_t samples, std::uint64_t seed,
                                   const CoverageOptions& options) {
  if (corpus.challenges.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no challenges");
  if (samples == 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  if (corpus.weights) {
    const auto& w = *corpus.weights;
    if (w.size() != corpus.challenges.size()) {
      throw Error(ErrorCode::kInvalidArgument, "corpus weights do not match challenge count");
    }
    for (double x : w) {
      if (!(x > 0.0)) throw Error(ErrorCode::kInvalidArgument, "corpus weights must be positive");
    }
  }

  std::vector<std::uint32_t> bits;
  bits.reserve(corpus.challenges.size());
  for (const auto& c : corpus.challenges) bits.push_back(letter_bits(c));

  // Letters that no challenge ever contains can never be covered; drop them
  // from the requirement so every trial terminates.
  std::uint32_t reachable = 0;
  for (auto b : bits) reachable |= b;
  const std::uint32_t mask = options.letter_mask & reachable;

  std::discrete_distribution<std::size_t> weighted;
  if (corpus.weights) weighted = {corpus.weights->begin(), corpus.weights->end()};
  std::uniform_int_distribution<std::size_t> uniform(0, bits.size() - 1);

  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    auto rng = make_stream(seed, t);
    auto draw = [&] { return corpus.weights ? weighted(rng) : uniform(rng); };
    const std::uint32_t target = bits[draw()] & mask;
    std::uint32_t seen = 0;
    std::uint64_t observed = 0;
    do {
      seen |= bits[draw()];
      ++observed;
    } while ((target & ~seen) != 0);
    const auto x = static_cast<double>(observed);
    sum += x;
    sum_sq += x * x;
  }

  const auto n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = samples > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
  const double half = 1.96 * std::sqrt(var / n);

  SecurityReport report;
  report.q_estimate = mean;
  report.q_ci = {mean - half, mean + half};
  report.q_stddev = std::sqrt(var);
  report.samples = samples;
  report.seed = seed;
  report.corpus_id = corpus.id;
  return report;
}

}  // namespace mindhash::analysis
