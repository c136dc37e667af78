#include "cspec/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include <boost/crc.hpp>
#include <unistd.h>

namespace cspec {

namespace fs = std::filesystem;
using nlohmann::json;

std::string crc32_hex(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  char buffer[9];
  std::snprintf(buffer, sizeof buffer, "%08x", static_cast<unsigned>(crc.checksum()));
  return buffer;
}

SpectrumCache::SpectrumCache(fs::path directory) : directory_(std::move(directory)) {}

fs::path SpectrumCache::default_directory() {
  if (const char* env = std::getenv("CLASS_SPECTRUM_CACHE"); env && *env) {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "class-spectrum";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "class-spectrum";
  }
  return fs::temp_directory_path() / "class-spectrum";
}

json SpectrumCache::make_key(std::string_view family, json parameters) {
  return json{
      {"family", family},
      {"parameters", std::move(parameters)},
      {"code_version", kCodeVersion},
  };
}

fs::path SpectrumCache::entry_path(const json& key) const {
  const std::string family = key.value("family", std::string("entry"));
  return directory_ / (family + "-" + crc32_hex(key.dump()) + ".json");
}

std::optional<json> SpectrumCache::load(const json& key) const {
  const fs::path path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();

  json entry = json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  bool intact = !entry.is_discarded() && entry.is_object() &&
                entry.value("format_version", 0) == kCacheFormatVersion &&
                entry.contains("key") && entry.contains("payload") && entry.contains("checksum") &&
                entry["checksum"].is_string() &&
                entry["checksum"].get<std::string>() == crc32_hex(entry["payload"].dump());
  if (!intact) {
    std::error_code ignored;
    fs::remove(path, ignored);
    return std::nullopt;
  }
  // A different key hashed to the same file name.
  if (entry["key"] != key) return std::nullopt;
  return std::move(entry["payload"]);
}

void SpectrumCache::store(const json& key, const json& payload) const {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) return;

  const json entry{
      {"format_version", kCacheFormatVersion},
      {"key", key},
      {"payload", payload},
      {"checksum", crc32_hex(payload.dump())},
  };
  static std::atomic<unsigned> counter{0};
  const fs::path target = entry_path(key);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
         << counter.fetch_add(1);
  const fs::path temporary = target.string() + suffix.str();
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << entry.dump() << '\n';
    if (!out) {
      out.close();
      fs::remove(temporary, ec);
      return;
    }
  }
  fs::rename(temporary, target, ec);
  if (ec) fs::remove(temporary, ec);
}

}  // namespace cspec
