#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "nichols/cyclotomic.hpp"

namespace nichols {

// Canonical rendering of a scalar for cache keys: the value at its minimal
// conductor, so every literal spelling of one value produces one key.
std::string canonical_scalar(const CyclotomicNumber& x);

// Canonical rendering of a whole parameter point.
std::string canonical_point(const ParamPoint& pt);

// One JSON file per key under a directory chosen by the caller (the CLI
// resolves --cache-dir, then the NICHOLS_CACHE_DIR environment variable).
// Files store the full key alongside the payload, so a rare filename-hash
// collision reads as a miss instead of returning a wrong result.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  // The stored payload for this key, if any.
  std::optional<std::string> load(const std::string& key) const;

  // Stores payload under key (write to a temp file, then rename).
  void store(const std::string& key, const std::string& payload) const;

  // Stable key -> filename mapping (operation prefix + FNV-1a of the key).
  static std::string file_name(const std::string& key);

private:
  std::filesystem::path dir_;
};

}  // namespace nichols
