#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "instance_io.hpp"

namespace hochq::cli {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const fs::path& p, const std::string& data) {
  // Write then rename so a concurrent reader never sees a partial file.
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << data;
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  return !ec;
}

}  // namespace

fs::path ResultCache::default_dir() {
  if (const char* dir = std::getenv("HOCHQ_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hochq";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hochq";
  return fs::temp_directory_path() / "hochq-cache";
}

std::string ResultCache::key(const std::string& canonical_instance, const std::string& command,
                             const std::string& params) {
  return sha256_hex(canonical_instance + '\n' + command + '\n' + params);
}

std::optional<CachedResult> ResultCache::lookup(const std::string& key) const {
  const auto status = read_file(dir_ / (key + ".status"));
  if (!status) return std::nullopt;
  const auto artifact = read_file(dir_ / (key + ".out"));
  if (!artifact) return std::nullopt;
  CachedResult r;
  try {
    r.exit_code = std::stoi(*status);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  r.artifact = *artifact;
  r.summary = read_file(dir_ / (key + ".log")).value_or("");
  return r;
}

bool ResultCache::store(const std::string& key, const CachedResult& result) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  // The status file is written last: it marks the entry complete.
  return write_file(dir_ / (key + ".out"), result.artifact) &&
         write_file(dir_ / (key + ".log"), result.summary) &&
         write_file(dir_ / (key + ".status"), std::to_string(result.exit_code));
}

}  // namespace hochq::cli
