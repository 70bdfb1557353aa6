#include "mindhash/key_io.hpp"

#include <fstream>

#include "mindhash/error.hpp"

namespace mindhash {
namespace {

Letter parse_letter(const nlohmann::json& j, const char* what) {
  if (!j.is_string() || j.get_ref<const std::string&>().size() != 1) {
    throw Error(ErrorCode::kParse, std::string(what) + " must be a one-letter string");
  }
  auto l = Letter::from_char(j.get_ref<const std::string&>()[0]);
  if (!l) throw Error(ErrorCode::kParse, std::string(what) + " must be a lowercase letter");
  return *l;
}

}  // namespace

nlohmann::json key_to_json(const SecretKey& key) {
  nlohmann::json j;
  j["format_version"] = kKeyFormatVersion;
  j["scheme"] = to_string(scheme_of(key));
  j["special"] = special_of(key);
  if (const auto* tw = std::get_if<ThreeWordKey>(&key)) {
    j["words"] = tw->words;
    j["wildcard"] = std::string(1, tw->wildcard.value());
  } else {
    const auto& rl = std::get<RandomLetterKey>(key);
    nlohmann::json map = nlohmann::json::object();
    for (std::size_t i = 0; i < rl.map.size(); ++i) {
      map[std::string(1, static_cast<char>('a' + i))] = std::string(1, rl.map[i].value());
    }
    j["map"] = std::move(map);
  }
  return j;
}

SecretKey key_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::kParse, "key must be a JSON object");
    if (j.contains("format_version") && j.at("format_version").get<int>() != kKeyFormatVersion) {
      throw Error(ErrorCode::kParse, "unsupported key format_version");
    }
    const auto scheme = scheme_from_string(j.at("scheme").get<std::string>());
    const auto special = j.at("special").get<std::string>();
    if (scheme == Scheme::kThreeWord) {
      const auto words = j.at("words").get<std::vector<std::string>>();
      if (words.size() != 3) throw Error(ErrorCode::kParse, "three-word key needs exactly 3 words");
      return ThreeWordKey{{words[0], words[1], words[2]}, parse_letter(j.at("wildcard"), "wildcard"),
                          special};
    }
    RandomLetterKey key;
    key.special = special;
    const auto& map = j.at("map");
    if (!map.is_object() || map.size() != kRandomLetterDomain) {
      throw Error(ErrorCode::kParse, "random-letter map must have exactly the entries a..t");
    }
    for (std::size_t i = 0; i < kRandomLetterDomain; ++i) {
      const std::string left(1, static_cast<char>('a' + i));
      if (!map.contains(left)) throw Error(ErrorCode::kParse, "map is missing entry " + left);
      key.map[i] = parse_letter(map.at(left), "map entry");
    }
    return key;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

SecretKey load_key(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open key file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return key_from_json(j);
}

void save_key(const std::filesystem::path& path, const SecretKey& key) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write key file " + path.string());
  out << key_to_json(key).dump(2) << '\n';
}

}  // namespace mindhash
