#pragma once

#include <optional>
#include <string>

#include "hochq/algebra.hpp"
#include "json.hpp"

namespace hochq::cli {

struct LoadedInstance {
  QInstance inst;
  std::optional<int> degree_cap;
  /// Compact JSON of the validated data (closed group, sorted characters).
  std::string canonical;
  /// SHA-256 hex digest of `canonical`.
  std::string hash;
};

/// Throws ParseError (malformed JSON or missing/ill-typed fields, with the
/// line or field named) or ValidationError.
LoadedInstance parse_instance(const std::string& text, const std::string& origin = "<input>");
LoadedInstance load_instance(const std::string& path);

std::string sha256_hex(const std::string& data);

nlohmann::ordered_json scalar_to_json(const ScalarExponent& e);

}  // namespace hochq::cli
