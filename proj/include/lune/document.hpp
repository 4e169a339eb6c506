#pragma once

#include <string>

#include "json.hpp"
#include "lune/bodies.hpp"

namespace lune {

inline constexpr const char* kSchemaVersion = "1";

/// Versioned JSON envelope for a body:
///   {"schema_version": "1", "kind": "cap"|"polygon"|"disk_polygon",
///    "data": {...}, "metadata": {...}}
struct BodyDocument {
  Body body = make_cap(SpherePoint(Vec3{0, 0, 1}), 0.1);
  nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json to_json(const BodyDocument& doc);
std::string serialize(const BodyDocument& doc);

/// Parses and re-validates. In strict mode unknown fields are rejected;
/// otherwise unknown top-level fields move into metadata["unknown_fields"].
/// Throws GeometryError(Schema) on malformed documents and the body's own
/// validation errors on invalid geometry.
BodyDocument from_json(const nlohmann::json& j, bool strict = true);
BodyDocument parse_document(const std::string& text, bool strict = true);

std::string kind_name(const Body& body);

}  // namespace lune
