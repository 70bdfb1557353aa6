#pragma once

#include <string>
#include <string_view>

#include "mindhash/challenge.hpp"
#include "mindhash/character_map.hpp"
#include "mindhash/keys.hpp"

namespace mindhash {

struct Password {
  std::string value;
  // Set when every challenge letter was skipped, leaving only the special string.
  bool all_skipped = false;
};

Password generate_password(const CharacterMap& map, std::string_view special,
                           const Challenge& challenge);
Password generate_password(const SecretKey& key, const Challenge& challenge);

}  // namespace mindhash
