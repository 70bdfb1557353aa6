#include "mindhash/challenge.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

#include "mindhash/error.hpp"
#include "mindhash/letter.hpp"

namespace mindhash {
namespace {

// Second-level labels that sit under a country code ("co.uk", "com.cn").
constexpr std::array<std::string_view, 9> kSecondLevelSuffixes = {
    "co", "com", "org", "net", "ac", "gov", "edu", "ne", "or"};

std::vector<std::string> split_labels(std::string_view host) {
  std::vector<std::string> labels;
  std::string current;
  for (char c : host) {
    if (c == '.') {
      if (!current.empty()) labels.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!current.empty()) labels.push_back(std::move(current));
  return labels;
}

}  // namespace

std::string registrable_label(std::string_view host) {
  // Drop any scheme, path and port: "https://www.x.com/a" -> "www.x.com".
  if (auto p = host.find("://"); p != std::string_view::npos) host.remove_prefix(p + 3);
  if (auto p = host.find('/'); p != std::string_view::npos) host = host.substr(0, p);
  if (auto p = host.find(':'); p != std::string_view::npos) host = host.substr(0, p);

  auto labels = split_labels(host);
  if (labels.empty()) return {};
  if (labels.size() > 1 && labels.front() == "www") labels.erase(labels.begin());
  if (labels.size() == 1) return labels.front();

  const auto n = labels.size();
  const bool cc_tld = labels[n - 1].size() == 2;
  const bool second_level =
      std::find(kSecondLevelSuffixes.begin(), kSecondLevelSuffixes.end(), labels[n - 2]) !=
      kSecondLevelSuffixes.end();
  if (n >= 3 && cc_tld && second_level) return labels[n - 3];
  return labels[n - 2];
}

Challenge Challenge::normalize(std::string_view raw, const NormalizeOptions& options) {
  std::string source = options.strip_tld ? registrable_label(raw) : std::string(raw);
  std::string letters;
  letters.reserve(source.size());
  for (char c : source) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (is_lower_letter(lower)) letters.push_back(lower);
  }
  if (options.truncate5 && letters.size() > 5) letters.resize(5);
  if (letters.empty()) {
    throw Error(ErrorCode::kEmptyChallenge, "no letters in \"" + std::string(raw) + "\"");
  }
  return Challenge(std::string(raw), std::move(letters));
}

}  // namespace mindhash
