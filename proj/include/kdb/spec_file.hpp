#pragma once

// Variety description files: one JSON (or flat TOML) document per variety.
//
//   {"kind":"toric","ambient_rank":3,"rays":[[0,0,1],[1,0,1],[0,1,1],[1,1,1]]}
//   {"kind":"cone","base":"projective_space","r":3,"d":2,"k_max":3}
//   {"kind":"cone","base":"hypersurface_surface","degree":4,"twist":5,"m_max":6}

#include <kdb/error.hpp>

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace kdb {

struct ToricInput {
  std::int64_t ambient_rank = 0;
  std::vector<std::vector<std::int64_t>> rays;
  friend bool operator==(const ToricInput&, const ToricInput&) = default;
};

enum class ConeBase { ProjectiveSpace, HypersurfaceSurface };

struct ConeInput {
  ConeBase base = ConeBase::ProjectiveSpace;
  /// (r, d) for projective space; (degree, twist) for the surface.
  std::int64_t first = 0;
  std::int64_t second = 0;

  std::int64_t base_dim() const { return base == ConeBase::ProjectiveSpace ? first : 2; }
  friend bool operator==(const ConeInput&, const ConeInput&) = default;
};

struct VarietySpecFile {
  std::variant<ToricInput, ConeInput> body;
  std::optional<std::int64_t> k_max;
  std::optional<std::int64_t> m_max;

  bool is_toric() const { return std::holds_alternative<ToricInput>(body); }
  const ToricInput& toric() const { return std::get<ToricInput>(body); }
  const ConeInput& cone() const { return std::get<ConeInput>(body); }

  friend bool operator==(const VarietySpecFile&, const VarietySpecFile&) = default;
};

using Json = nlohmann::ordered_json;

namespace detail {

inline std::int64_t require_int(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw SchemaError(key, "required");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw SchemaError(key, "must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(INT64_MAX))
    throw SchemaError(key, "out of range");
  return v.get<std::int64_t>();
}

inline std::int64_t require_at_least(const Json& doc, const std::string& key, std::int64_t lo) {
  std::int64_t v = require_int(doc, key);
  if (v < lo) throw SchemaError(key, "must be ≥ " + std::to_string(lo));
  return v;
}

inline void reject_unknown_keys(const Json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) throw SchemaError(key, "unknown field");
}

// Flat TOML subset: top-level `key = value` lines with integers, strings and
// (nested, possibly multi-line) integer arrays; `#` comments.
inline Json toml_value(const std::string& text, const std::string& key) {
  std::string s;
  bool in_string = false;
  for (char c : text) {
    if (c == '"') in_string = !in_string;
    if (!in_string && std::isspace(static_cast<unsigned char>(c))) continue;
    s.push_back(c);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  // Integer arrays and integers share JSON's syntax once whitespace is gone;
  // TOML allows a trailing comma before `]`.
  std::string cleaned;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ',' && i + 1 < s.size() && s[i + 1] == ']') continue;
    if (s[i] == '_') continue;
    cleaned.push_back(s[i]);
  }
  Json v = Json::parse(cleaned, nullptr, false);
  if (v.is_discarded()) throw SchemaError(key, "unsupported TOML value");
  return v;
}

inline Json parse_toml(const std::string& text) {
  Json doc = Json::object();
  std::istringstream in(text);
  std::string line, key, pending;
  int depth = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        line.erase(i);
        break;
      }
    }
    if (depth == 0) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '[') throw SchemaError("line " + std::to_string(lineno), "TOML tables are not supported");
      auto eq = line.find('=');
      if (eq == std::string::npos) throw SchemaError("line " + std::to_string(lineno), "expected key = value");
      key = line.substr(first, eq - first);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
      if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
      pending = line.substr(eq + 1);
    } else {
      pending += line;
    }
    depth = 0;
    for (char c : pending) depth += (c == '[') - (c == ']');
    if (depth > 0) continue;
    if (doc.contains(key)) throw SchemaError(key, "duplicate key");
    doc[key] = toml_value(pending, key);
  }
  if (depth != 0) throw SchemaError(key, "unterminated array");
  return doc;
}

}  // namespace detail

/// Validates a parsed document against the schema.
inline VarietySpecFile spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "document must be an object");
  if (!doc.contains("kind")) throw SchemaError("kind", "required");
  if (!doc.at("kind").is_string()) throw SchemaError("kind", "must be a string");
  const std::string kind = doc.at("kind").get<std::string>();

  VarietySpecFile spec;
  if (kind == "toric") {
    detail::reject_unknown_keys(doc, {"kind", "ambient_rank", "rays", "k_max"});
    ToricInput t;
    t.ambient_rank = detail::require_at_least(doc, "ambient_rank", 1);
    if (!doc.contains("rays")) throw SchemaError("rays", "required");
    const Json& rays = doc.at("rays");
    if (!rays.is_array()) throw SchemaError("rays", "must be an array of integer arrays");
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const std::string path = "rays[" + std::to_string(i) + "]";
      if (!rays[i].is_array()) throw SchemaError(path, "must be an integer array");
      if (static_cast<std::int64_t>(rays[i].size()) != t.ambient_rank)
        throw SchemaError(path, "length must equal ambient_rank");
      std::vector<std::int64_t> ray;
      for (std::size_t j = 0; j < rays[i].size(); ++j) {
        const Json& x = rays[i][j];
        if (!x.is_number_integer() || (x.is_number_unsigned() && x.get<std::uint64_t>() > std::uint64_t(INT64_MAX)))
          throw SchemaError(path + "[" + std::to_string(j) + "]", "must be an integer");
        ray.push_back(x.get<std::int64_t>());
      }
      t.rays.push_back(std::move(ray));
    }
    spec.body = std::move(t);
  } else if (kind == "cone") {
    if (!doc.contains("base")) throw SchemaError("base", "required");
    if (!doc.at("base").is_string()) throw SchemaError("base", "must be a string");
    const std::string base = doc.at("base").get<std::string>();
    ConeInput c;
    if (base == "projective_space") {
      detail::reject_unknown_keys(doc, {"kind", "base", "r", "d", "k_max", "m_max"});
      c.base = ConeBase::ProjectiveSpace;
      c.first = detail::require_at_least(doc, "r", 1);
      c.second = detail::require_at_least(doc, "d", 1);
    } else if (base == "hypersurface_surface") {
      detail::reject_unknown_keys(doc, {"kind", "base", "degree", "twist", "k_max", "m_max"});
      c.base = ConeBase::HypersurfaceSurface;
      c.first = detail::require_at_least(doc, "degree", 1);
      c.second = detail::require_at_least(doc, "twist", 1);
    } else {
      throw SchemaError("base", "must be \"projective_space\" or \"hypersurface_surface\"");
    }
    spec.body = c;
    if (doc.contains("m_max")) spec.m_max = detail::require_at_least(doc, "m_max", 1);
  } else {
    throw SchemaError("kind", "must be \"toric\" or \"cone\"");
  }

  if (doc.contains("k_max")) {
    spec.k_max = detail::require_at_least(doc, "k_max", 0);
    if (!spec.is_toric() && *spec.k_max > spec.cone().base_dim() + 1)
      throw SchemaError("k_max", "must be ≤ base dimension + 1 = " + std::to_string(spec.cone().base_dim() + 1));
  }
  return spec;
}

/// Parses JSON, or the flat TOML subset when the text is not a JSON object.
inline VarietySpecFile parse_spec(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("$", "malformed JSON");
    return spec_from_json(doc);
  }
  return spec_from_json(detail::parse_toml(text));
}

inline Json spec_to_json(const VarietySpecFile& spec) {
  Json doc = Json::object();
  if (spec.is_toric()) {
    const auto& t = spec.toric();
    doc["kind"] = "toric";
    doc["ambient_rank"] = t.ambient_rank;
    doc["rays"] = t.rays;
  } else {
    const auto& c = spec.cone();
    doc["kind"] = "cone";
    if (c.base == ConeBase::ProjectiveSpace) {
      doc["base"] = "projective_space";
      doc["r"] = c.first;
      doc["d"] = c.second;
    } else {
      doc["base"] = "hypersurface_surface";
      doc["degree"] = c.first;
      doc["twist"] = c.second;
    }
  }
  if (spec.k_max) doc["k_max"] = *spec.k_max;
  if (spec.m_max) doc["m_max"] = *spec.m_max;
  return doc;
}

inline std::string serialize_spec(const VarietySpecFile& spec) { return spec_to_json(spec).dump(); }

}  // namespace kdb
