#include "instance_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hochq/error.hpp"

namespace hochq::cli {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a list of integers");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(as_int(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

// {free: [...], torsion: t} or a bare integer t (torsion only).
ScalarExponent as_scalar(const json& v, const ScalarGroupSpec& spec, const std::string& where) {
  std::vector<std::int64_t> free(spec.free_rank, 0);
  std::int64_t torsion = 0;
  if (v.is_number_integer()) {
    torsion = v.get<std::int64_t>();
  } else if (v.is_object()) {
    if (v.contains("free")) free = as_int_list(v["free"], where + ".free");
    if (v.contains("torsion")) torsion = as_int(v["torsion"], where + ".torsion");
    for (const auto& [k, _] : v.items()) {
      if (k != "free" && k != "torsion") throw ParseError(where + ": unknown field '" + k + "'");
    }
  } else {
    throw ParseError(where + ": expected {free, torsion} or an integer");
  }
  if (static_cast<int>(free.size()) != spec.free_rank) {
    throw ValidationError("q_shape", where,
                          "free part has length " + std::to_string(free.size()) +
                              ", expected free_rank " + std::to_string(spec.free_rank));
  }
  return spec.make(free, torsion);
}

std::string canonical_form(const QInstance& inst) {
  nlohmann::ordered_json q = nlohmann::ordered_json::array();
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = i + 1; j < inst.n(); ++j) q.push_back(scalar_to_json(inst.q(i, j)));
  }
  std::vector<std::vector<std::int64_t>> chars;
  for (int g = 0; g < inst.group.size(); ++g) chars.push_back(inst.group.character(g));
  std::sort(chars.begin(), chars.end());
  nlohmann::ordered_json c;
  c["n"] = inst.n();
  c["free_rank"] = inst.scalars.free_rank;
  c["torsion_order"] = inst.scalars.torsion_order;
  c["q"] = q;
  c["group"] = chars;
  return c.dump();
}

}  // namespace

nlohmann::ordered_json scalar_to_json(const ScalarExponent& e) {
  return {{"free", e.free()}, {"torsion", e.torsion()}};
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

LoadedInstance parse_instance(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");

  const int n = static_cast<int>(as_int(require(doc, "n", origin), "n"));
  if (n < 1) throw ValidationError("n", "n", "need at least one variable");

  ScalarGroupSpec spec;
  if (doc.contains("scalar_group")) {
    const auto& sg = doc["scalar_group"];
    if (!sg.is_object()) throw ParseError("scalar_group: expected an object");
    spec.free_rank = static_cast<int>(as_int(require(sg, "free_rank", "scalar_group"), "scalar_group.free_rank"));
    spec.torsion_order = as_int(require(sg, "torsion_order", "scalar_group"), "scalar_group.torsion_order");
  } else {
    if (doc.contains("free_rank")) spec.free_rank = static_cast<int>(as_int(doc["free_rank"], "free_rank"));
    if (doc.contains("torsion_order")) spec.torsion_order = as_int(doc["torsion_order"], "torsion_order");
  }
  spec.validate();

  const char* q_key = doc.contains("q_exponents") ? "q_exponents" : "q";
  std::vector<ScalarExponent> upper;
  if (doc.contains(q_key)) {
    const auto& q = doc[q_key];
    if (!q.is_array()) throw ParseError(std::string(q_key) + ": expected a list");
    for (std::size_t k = 0; k < q.size(); ++k) {
      upper.push_back(as_scalar(q[k], spec, std::string(q_key) + "[" + std::to_string(k) + "]"));
    }
  } else if (n > 1) {
    throw ParseError(origin + ": missing field 'q_exponents'");
  }

  std::vector<std::vector<std::int64_t>> generators;
  if (doc.contains("group")) {
    const auto& group = doc["group"];
    if (!group.is_object()) throw ParseError("group: expected an object");
    if (group.contains("generators")) {
      const auto& gens = group["generators"];
      if (!gens.is_array()) throw ParseError("group.generators: expected a list");
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::string where = "group.generators[" + std::to_string(k) + "]";
        if (!gens[k].is_array()) throw ParseError(where + ": expected a list of length n");
        if (static_cast<int>(gens[k].size()) != n) {
          throw ValidationError("generator_length", where, "generator must have one entry per variable");
        }
        std::vector<std::int64_t> character;
        for (int i = 0; i < n; ++i) {
          const std::string at = where + "[" + std::to_string(i) + "]";
          const auto lambda = as_scalar(gens[k][i], spec, at);
          if (lambda.max_abs_free() != 0) {
            throw ValidationError("lambda_finite_order", at,
                                  "lambda_{g,i} must be a root of unity (zero free part)");
          }
          character.push_back(lambda.torsion());
        }
        generators.push_back(std::move(character));
      }
    }
  }

  LoadedInstance out;
  out.inst = make_instance(spec, n, upper, generators);
  // Re-check through the validator so every invariant is enforced in one place.
  RawInstance raw{spec, out.inst.q, {}};
  for (int g = 0; g < out.inst.group.size(); ++g) {
    std::vector<ScalarExponent> lambdas;
    for (int i = 0; i < n; ++i) lambdas.push_back(out.inst.group.lambda(g, i));
    raw.group_elements.push_back(std::move(lambdas));
  }
  validate_instance(raw);

  if (doc.contains("degree_cap")) {
    const auto cap = as_int(doc["degree_cap"], "degree_cap");
    if (cap < 0) throw ValidationError("degree_cap", "degree_cap", "degree cap must be >= 0");
    out.degree_cap = static_cast<int>(cap);
  }
  out.canonical = canonical_form(out.inst);
  out.hash = sha256_hex(out.canonical);
  return out;
}

LoadedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open instance file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

}  // namespace hochq::cli
