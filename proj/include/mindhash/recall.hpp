#pragma once

#include <string>
#include <string_view>

#include "mindhash/keys.hpp"

namespace mindhash::study {

struct RecallScore {
  int correct = 0;
  int total = 0;

  double fraction() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
  bool operator==(const RecallScore&) const = default;
};

// Three-word keys: words recalled, case- and order-insensitive, out of 3.
// Random-letter keys: map entries recalled out of 20. Accepted forms are
// pairs such as "a=q", "a:q", "a->q" or "aq", or one 20-letter string
// listing the images of a..t in order.
RecallScore score_recall(const SecretKey& key, std::string_view recalled);

struct RecallRecord {
  std::string session_id;
  int day_index = 0;
  std::string text;
  RecallScore score;
};

}  // namespace mindhash::study
