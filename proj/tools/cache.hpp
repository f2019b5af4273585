#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace hochq::cli {

struct CachedResult {
  int exit_code = 0;
  std::string artifact;
  std::string summary;
};

/// Content-addressed store of command outputs: <key>.out holds the artifact,
/// <key>.status the exit code and <key>.log the summary.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// HOCHQ_CACHE_DIR, else $XDG_CACHE_HOME/hochq, else ~/.cache/hochq.
  static std::filesystem::path default_dir();
  /// SHA-256 over the canonical instance, the command and its parameters.
  static std::string key(const std::string& canonical_instance, const std::string& command,
                         const std::string& params);

  std::optional<CachedResult> lookup(const std::string& key) const;
  /// Best effort: an unwritable cache directory is not an error.
  bool store(const std::string& key, const CachedResult& result) const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace hochq::cli
