#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "hess/errors.hpp"
#include "hess/version.hpp"

namespace hess::cache {

namespace fs = std::filesystem;
using json = nlohmann::json;

// HESSLAB_CACHE_DIR, else ~/.cache/hesslab, else ./.hesslab_cache
inline fs::path cache_dir() {
  if (const char* env = std::getenv("HESSLAB_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "hesslab";
  return fs::path(".hesslab_cache");
}

inline std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

inline std::string make_key(int n, long long p, const std::string& type, const std::string& m,
                            const std::string& op) {
  return "n=" + std::to_string(n) + "|p=" + std::to_string(p) + "|type=" + type + "|m=" + m +
         "|op=" + op;
}

inline fs::path entry_path(const std::string& key) {
  return cache_dir() / (fnv1a64_hex(key) + ".json");
}

// hit only when the stored key echoes back exactly (hash collisions and
// truncated writes miss) and the entry was written by this tool version.
inline std::optional<json> load(const std::string& key) {
  const fs::path path = entry_path(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json entry;
  try {
    in >> entry;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  if (!entry.is_object() || !entry.contains("key") || !entry.contains("value") ||
      !entry.contains("tool_version"))
    return std::nullopt;
  if (entry["key"] != key || entry["tool_version"] != tool_version) return std::nullopt;
  return entry["value"];
}

inline void store(const std::string& key, const json& value) {
  const fs::path dir = cache_dir();
  std::error_code ec;
  fs::create_directories(dir, ec);
  json entry;
  entry["key"] = key;
  entry["value"] = value;
  entry["tool_version"] = tool_version;
  const fs::path path = entry_path(key);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw invalid_input("cache: cannot write " + tmp.string());
    out << entry.dump(2) << "\n";
  }
  fs::rename(tmp, path, ec);
  if (ec) throw invalid_input("cache: cannot finalize " + path.string());
}

inline std::size_t clear() {
  const fs::path dir = cache_dir();
  std::error_code ec;
  if (!fs::exists(dir, ec)) return 0;
  std::size_t removed = 0;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json" && fs::remove(entry.path(), ec)) ++removed;
  }
  return removed;
}

inline std::pair<fs::path, std::size_t> status() {
  const fs::path dir = cache_dir();
  std::error_code ec;
  std::size_t count = 0;
  if (fs::exists(dir, ec))
    for (const auto& entry : fs::directory_iterator(dir, ec))
      if (entry.path().extension() == ".json") ++count;
  return {dir, count};
}

}  // namespace hess::cache
