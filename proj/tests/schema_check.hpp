#pragma once

// Minimal draft-07 validator covering the keyword subset used by
// schemas/verify_report.schema.json: type, enum, properties, required,
// additionalProperties (boolean form), items, minItems, minimum,
// exclusiveMinimum (numeric form), pattern.

#include <json.hpp>

#include <regex>
#include <string>
#include <vector>

namespace schema_check {

inline bool type_matches(const std::string& type, const nlohmann::json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  return false;
}

inline void validate_node(const nlohmann::json& schema,
                          const nlohmann::json& value, const std::string& path,
                          std::vector<std::string>& violations) {
  if (schema.contains("type") &&
      !type_matches(schema["type"].get<std::string>(), value)) {
    violations.push_back(path + ": expected type " +
                         schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) found = true;
    if (!found) violations.push_back(path + ": value not in enum");
  }
  if (value.is_number()) {
    const double x = value.get<double>();
    if (schema.contains("minimum") && x < schema["minimum"].get<double>())
      violations.push_back(path + ": below minimum");
    if (schema.contains("exclusiveMinimum") &&
        x <= schema["exclusiveMinimum"].get<double>())
      violations.push_back(path + ": not above exclusive minimum");
  }
  if (value.is_string() && schema.contains("pattern")) {
    const std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(value.get<std::string>(), re))
      violations.push_back(path + ": pattern mismatch for '" +
                           value.get<std::string>() + "'");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          violations.push_back(path + ": missing required key " +
                               key.get<std::string>());
    const bool closed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"].is_boolean() &&
                        !schema["additionalProperties"].get<bool>();
    for (const auto& [key, child] : value.items()) {
      const bool declared =
          schema.contains("properties") && schema["properties"].contains(key);
      if (declared) {
        validate_node(schema["properties"][key], child, path + "/" + key,
                      violations);
      } else if (closed) {
        violations.push_back(path + ": unexpected key " + key);
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") &&
        value.size() < schema["minItems"].get<std::size_t>())
      violations.push_back(path + ": fewer than minItems elements");
    if (schema.contains("items")) {
      std::size_t index = 0;
      for (const auto& element : value) {
        validate_node(schema["items"], element,
                      path + "/" + std::to_string(index), violations);
        ++index;
      }
    }
  }
}

inline std::vector<std::string> validate(const nlohmann::json& schema,
                                         const nlohmann::json& value) {
  std::vector<std::string> violations;
  validate_node(schema, value, "#", violations);
  return violations;
}

}  // namespace schema_check
