#include "mindhash/password.hpp"

namespace mindhash {

Password generate_password(const CharacterMap& map, std::string_view special,
                           const Challenge& challenge) {
  Password out;
  out.value.reserve(challenge.size() + special.size());
  for (char c : challenge.letters()) {
    if (auto mapped = map(Letter(c))) out.value.push_back(mapped->value());
  }
  out.all_skipped = out.value.empty();
  out.value.append(special);
  return out;
}

Password generate_password(const SecretKey& key, const Challenge& challenge) {
  return generate_password(CharacterMap::from_key(key), special_of(key), challenge);
}

}  // namespace mindhash
