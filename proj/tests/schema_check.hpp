#pragma once

// Validator for the subset of JSON Schema used by docs/report.schema.json:
// type, enum, const, required, properties, items, minimum, maximum, allOf, if/then, $ref.

#include "json.hpp"

#include <fstream>
#include <string>

namespace schema {

using nlohmann::json;

inline json load(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  /// Empty when `doc` conforms, otherwise the JSON pointer of the first failure.
  std::string check(const json& doc) const { return check(root_, doc, ""); }

 private:
  const json& resolve(const json& s) const {
    if (!s.contains("$ref")) return s;
    const std::string ref = s["$ref"];
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  std::string check(const json& schema_in, const json& v, const std::string& at) const {
    const json& s = resolve(schema_in);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_string()) {
        ok = has_type(v, s["type"]);
      } else {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      }
      if (!ok) return at + ": wrong type";
    }
    if (s.contains("enum")) {
      bool ok = false;
      for (const auto& e : s["enum"]) ok = ok || e == v;
      if (!ok) return at + ": not in enum";
    }
    if (s.contains("const") && s["const"] != v) return at + ": const mismatch";
    if (v.is_number()) {
      if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) return at + ": below minimum";
      if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) return at + ": above maximum";
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& k : s["required"]) {
          if (!v.contains(k.get<std::string>())) return at + ": missing " + k.get<std::string>();
        }
      }
      if (s.contains("properties")) {
        for (const auto& [k, sub] : s["properties"].items()) {
          if (!v.contains(k)) continue;
          if (auto e = check(sub, v[k], at + "/" + k); !e.empty()) return e;
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (auto e = check(s["items"], v[i], at + "/" + std::to_string(i)); !e.empty()) return e;
      }
    }
    if (s.contains("allOf")) {
      for (const auto& sub : s["allOf"]) {
        if (auto e = check(sub, v, at); !e.empty()) return e;
      }
    }
    if (s.contains("if") && check(s["if"], v, at).empty() && s.contains("then")) {
      if (auto e = check(s["then"], v, at); !e.empty()) return e;
    }
    return {};
  }

  json root_;
};

}  // namespace schema
