#pragma once

// Content-addressed result store. One file per key; a VERSION stamp in the
// directory drops every entry written under another version.

#include <filesystem>
#include <optional>
#include <string>

#include "oddkh/pd.hpp"

namespace oddkh {

inline constexpr const char* kCacheVersion = "oddkh-1.0.0/1";

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, std::string version = kCacheVersion);

  /// Key over the version, the diagram (canonical form and name), the
  /// operation and its options.
  std::string key(const Diagram& d, const std::string& op, const std::string& options) const;

  std::optional<std::string> get(const std::string& key) const;
  /// Writes to a temporary file and renames it into place.
  void put(const std::string& key, const std::string& value) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path entry(const std::string& key) const;

  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace oddkh
