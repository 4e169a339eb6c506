#include "lune/document.hpp"

#include <set>

namespace lune {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& why) { throw GeometryError(ErrorCode::Schema, why); }

json vec_json(const SpherePoint& p) { return json::array({p.x(), p.y(), p.z()}); }

SpherePoint vec_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) schema(what + " must be an array of 3 numbers");
  for (const auto& x : j) {
    if (!x.is_number()) schema(what + " must be an array of 3 numbers");
  }
  const Vec3 v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  if (!(v.norm() > 0.0) || !std::isfinite(v.norm())) schema(what + " is not a nonzero finite vector");
  return SpherePoint(v);
}

double number_from(const json& j, const std::string& what) {
  if (!j.is_number()) schema(what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema(what + " must be finite");
  return x;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where + " lacks '" + key + "'");
  return *it;
}

void only_fields(const json& obj, std::set<std::string> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) schema("unknown field '" + key + "' in " + where);
  }
}

json edge_json(const Edge& e) {
  json j{{"kind", e.kind == EdgeKind::Geodesic ? "geodesic" : "arc"},
         {"start", vec_json(e.start)},
         {"end", vec_json(e.end)}};
  if (e.kind == EdgeKind::CircularArc) {
    j["center"] = vec_json(e.arc_center);
    j["radius"] = e.arc_radius;
  }
  return j;
}

Edge edge_from(const json& j, bool strict, std::size_t i) {
  const std::string where = "edge " + std::to_string(i);
  if (!j.is_object()) schema(where + " must be an object");
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) schema(where + " kind must be a string");
  const SpherePoint a = vec_from(field(j, "start", where), where + " start");
  const SpherePoint b = vec_from(field(j, "end", where), where + " end");
  if (kind == "geodesic") {
    if (strict) only_fields(j, {"kind", "start", "end"}, where);
    return Edge::geodesic(a, b);
  }
  if (kind == "arc") {
    if (strict) only_fields(j, {"kind", "start", "end", "center", "radius"}, where);
    return Edge::arc(a, b, vec_from(field(j, "center", where), where + " center"),
                     number_from(field(j, "radius", where), where + " radius"));
  }
  schema(where + " has unknown kind '" + kind.get<std::string>() + "'");
}

}  // namespace

std::string kind_name(const Body& body) {
  switch (body.index()) {
    case 0: return "cap";
    case 1: return "polygon";
    default: return "disk_polygon";
  }
}

json to_json(const BodyDocument& doc) {
  json data;
  if (const auto* cap = std::get_if<Cap>(&doc.body)) {
    data = {{"center", vec_json(cap->center())}, {"radius", cap->radius()}};
  } else if (const auto* poly = std::get_if<ConvexPolygon>(&doc.body)) {
    data["vertices"] = json::array();
    for (const auto& v : poly->vertices()) data["vertices"].push_back(vec_json(v));
  } else {
    data["edges"] = json::array();
    for (const auto& e : std::get<DiskPolygon>(doc.body).edges()) data["edges"].push_back(edge_json(e));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", kind_name(doc.body)},
          {"data", data},
          {"metadata", doc.metadata.is_null() ? json::object() : doc.metadata}};
}

std::string serialize(const BodyDocument& doc) { return to_json(doc).dump(2) + "\n"; }

BodyDocument from_json(const json& j, bool strict) {
  if (!j.is_object()) schema("document must be a JSON object");
  const json& version = field(j, "schema_version", "document");
  if (!version.is_string() || version != kSchemaVersion) {
    schema("unsupported schema_version (expected \"1\")");
  }
  const json& kind = field(j, "kind", "document");
  const json& data = field(j, "data", "document");
  if (!kind.is_string()) schema("kind must be a string");
  if (!data.is_object()) schema("data must be an object");

  BodyDocument doc;
  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) schema("metadata must be an object");
    doc.metadata = *it;
  }
  json unknown = json::object();
  for (const auto& [key, value] : j.items()) {
    if (key == "schema_version" || key == "kind" || key == "data" || key == "metadata") continue;
    if (strict) schema("unknown field '" + key + "' in document");
    unknown[key] = value;
  }
  if (!unknown.empty()) doc.metadata["unknown_fields"] = unknown;

  if (kind == "cap") {
    if (strict) only_fields(data, {"center", "radius"}, "cap data");
    doc.body = Cap(vec_from(field(data, "center", "cap data"), "cap center"),
                   number_from(field(data, "radius", "cap data"), "cap radius"));
  } else if (kind == "polygon") {
    if (strict) only_fields(data, {"vertices"}, "polygon data");
    const json& vs = field(data, "vertices", "polygon data");
    if (!vs.is_array()) schema("vertices must be an array");
    std::vector<SpherePoint> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      vertices.push_back(vec_from(vs[i], "vertex " + std::to_string(i)));
    }
    doc.body = ConvexPolygon(std::move(vertices));
  } else if (kind == "disk_polygon") {
    if (strict) only_fields(data, {"edges"}, "disk_polygon data");
    const json& es = field(data, "edges", "disk_polygon data");
    if (!es.is_array()) schema("edges must be an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) edges.push_back(edge_from(es[i], strict, i));
    doc.body = DiskPolygon(std::move(edges));
  } else {
    schema("unknown kind '" + kind.get<std::string>() + "'");
  }
  return doc;
}

BodyDocument parse_document(const std::string& text, bool strict) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j, strict);
}

}  // namespace lune
