#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "mindhash/keys.hpp"

namespace mindhash {

inline constexpr int kKeyFormatVersion = 1;

nlohmann::json key_to_json(const SecretKey& key);
// Structural parse only; throws Error(kParse) on malformed input or an unknown scheme.
SecretKey key_from_json(const nlohmann::json& j);

SecretKey load_key(const std::filesystem::path& path);
void save_key(const std::filesystem::path& path, const SecretKey& key);

}  // namespace mindhash
