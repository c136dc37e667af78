#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace cspec {

// Bumped whenever a cached payload could change for the same key.
inline constexpr std::string_view kCodeVersion = "1";
inline constexpr int kCacheFormatVersion = 1;

// On-disk cache of computed spectra and tables. One versioned JSON file per
// key holding the payload and its CRC-32. Writes go to a temporary file and
// are renamed into place, so readers never observe a partial entry.
class SpectrumCache {
 public:
  explicit SpectrumCache(std::filesystem::path directory);

  // $CLASS_SPECTRUM_CACHE, else $XDG_CACHE_HOME/class-spectrum, else
  // ~/.cache/class-spectrum, else a directory under the system temp path.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return directory_; }

  // Builds the key for a family; code version is folded in.
  static nlohmann::json make_key(std::string_view family, nlohmann::json parameters);

  // Returns the payload if present and intact. Corrupt or mismatched entries
  // are deleted and reported as a miss.
  std::optional<nlohmann::json> load(const nlohmann::json& key) const;

  void store(const nlohmann::json& key, const nlohmann::json& payload) const;

  std::filesystem::path entry_path(const nlohmann::json& key) const;

  template <typename Compute>
  nlohmann::json get_or_compute(const nlohmann::json& key, Compute&& compute) const {
    if (auto hit = load(key)) return *std::move(hit);
    nlohmann::json payload = compute();
    store(key, payload);
    return payload;
  }

 private:
  std::filesystem::path directory_;
};

std::string crc32_hex(std::string_view bytes);

}  // namespace cspec
