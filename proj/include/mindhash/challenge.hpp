#pragma once

#include <string>
#include <string_view>

namespace mindhash {

struct NormalizeOptions {
  // Reduce a domain name to its registrable label ("www.amazon.co.uk" -> "amazon").
  bool strip_tld = false;
  // Keep only the first five letters after normalization.
  bool truncate5 = false;
};

// A website name reduced to a nonempty run of lowercase letters.
class Challenge {
 public:
  // Throws Error(kEmptyChallenge) if no letter survives normalization.
  static Challenge normalize(std::string_view raw, const NormalizeOptions& options = {});

  const std::string& raw() const { return raw_; }
  const std::string& letters() const { return normalized_; }
  std::size_t size() const { return normalized_.size(); }

  bool operator==(const Challenge& other) const { return normalized_ == other.normalized_; }

 private:
  Challenge(std::string raw, std::string normalized)
      : raw_(std::move(raw)), normalized_(std::move(normalized)) {}

  std::string raw_;
  std::string normalized_;
};

inline Challenge normalize_challenge(std::string_view raw, const NormalizeOptions& options = {}) {
  return Challenge::normalize(raw, options);
}

// Registrable label of a host name; exposed for corpus loading.
std::string registrable_label(std::string_view host);

}  // namespace mindhash
