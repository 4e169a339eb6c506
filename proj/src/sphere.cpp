#include "lune/sphere.hpp"

#include <string>

namespace lune {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::AntipodalEndpoints: return "AntipodalEndpoints";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DegenerateLune: return "DegenerateLune";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotInOpenHemisphere: return "NotInOpenHemisphere";
    case ErrorCode::InvalidBody: return "InvalidBody";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::BadThickness: return "BadThickness";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::NotSupporting: return "NotSupporting";
    case ErrorCode::DiameterMismatch: return "DiameterMismatch";
    case ErrorCode::ThicknessTooLarge: return "ThicknessTooLarge";
    case ErrorCode::NotConstantWidthOverHalfPi: return "NotConstantWidthOverHalfPi";
    case ErrorCode::RegimeUnknown: return "RegimeUnknown";
    case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

SpherePoint::SpherePoint(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw GeometryError(ErrorCode::InvalidPoint, "cannot normalize a zero or non-finite vector");
  }
  v_ = v * (1.0 / n);
}

bool SpherePoint::lex_less(const SpherePoint& o) const {
  if (v_.x != o.v_.x) return v_.x < o.v_.x;
  if (v_.y != o.v_.y) return v_.y < o.v_.y;
  return v_.z < o.v_.z;
}

double GeodesicArc::length() const { return distance(a, b); }

double distance(const SpherePoint& a, const SpherePoint& b) {
  return std::atan2(cross(a.vec(), b.vec()).norm(), dot(a.vec(), b.vec()));
}

SpherePoint antipode(const SpherePoint& p) { return -p; }

Vec3 tangent_toward(const SpherePoint& p, const SpherePoint& q, bool* ok) {
  const Vec3 t = q.vec() - dot(p, q) * p.vec();
  const double n = t.norm();
  if (n < 1e-15) {
    if (ok) *ok = false;
    return {};
  }
  if (ok) *ok = true;
  return t * (1.0 / n);
}

SpherePoint walk(const SpherePoint& p, const Vec3& t, double s) {
  return SpherePoint(std::cos(s) * p.vec() + std::sin(s) * t);
}

SpherePoint move_toward(const SpherePoint& p, const SpherePoint& q, double s) {
  bool ok = false;
  const Vec3 t = tangent_toward(p, q, &ok);
  if (!ok) {
    throw GeometryError(ErrorCode::AntipodalEndpoints, "direction toward a coincident or antipodal point");
  }
  return walk(p, t, s);
}

SpherePoint interpolate(const SpherePoint& a, const SpherePoint& b, double t, double eps_alg) {
  const double d = distance(a, b);
  if (d > kPi - eps_alg) {
    throw GeometryError(ErrorCode::AntipodalEndpoints, "arc endpoints are (nearly) antipodal");
  }
  if (d == 0.0) return a;
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  bool ok = false;
  const Vec3 u = tangent_toward(a, b, &ok);
  if (!ok) return a;
  return walk(a, u, t * d);
}

double triple(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
  return dot(a.vec(), cross(b.vec(), c.vec()));
}

int orient(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c, double eps_alg) {
  const double t = triple(a, b, c);
  if (std::abs(t) < eps_alg) return 0;
  return t > 0 ? 1 : -1;
}

Circle circumcircle(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                    double eps_alg) {
  if (orient(a, b, c, eps_alg) == 0) {
    throw GeometryError(ErrorCode::DegenerateTriple, "points lie on one great circle");
  }
  // The plane through a, b, c has normal (b - a) x (c - a); the circle center
  // is that normal, signed toward the points.
  Vec3 n = cross(b.vec() - a.vec(), c.vec() - a.vec());
  if (dot(n, a.vec()) < 0) n = -n;
  SpherePoint center(n);
  const double r = (distance(center, a) + distance(center, b) + distance(center, c)) / 3.0;
  return {center, r};
}

std::array<Vec3, 2> tangent_frame(const SpherePoint& c) {
  const Vec3& v = c.vec();
  // Pick the coordinate axis least aligned with c as a seed.
  Vec3 seed{1, 0, 0};
  if (std::abs(v.y) < std::abs(v.x) && std::abs(v.y) <= std::abs(v.z)) {
    seed = {0, 1, 0};
  } else if (std::abs(v.z) < std::abs(v.x) && std::abs(v.z) < std::abs(v.y)) {
    seed = {0, 0, 1};
  }
  Vec3 e1 = seed - dot(seed, v) * v;
  e1 = e1 * (1.0 / e1.norm());
  const Vec3 e2 = cross(v, e1);
  return {e1, e2};
}

SpherePoint polar_offset(const SpherePoint& c, const Vec3& e1, const Vec3& e2, double r,
                         double phi) {
  const Vec3 d = std::cos(phi) * e1 + std::sin(phi) * e2;
  return SpherePoint(std::cos(r) * c.vec() + std::sin(r) * d);
}

Rotation Rotation::about(const Vec3& axis, double angle) {
  const double n = axis.norm();
  const Vec3 k = axis * (1.0 / n);
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  Rotation r;
  r.m = {t * k.x * k.x + c,       t * k.x * k.y - s * k.z, t * k.x * k.z + s * k.y,
         t * k.x * k.y + s * k.z, t * k.y * k.y + c,       t * k.y * k.z - s * k.x,
         t * k.x * k.z - s * k.y, t * k.y * k.z + s * k.x, t * k.z * k.z + c};
  return r;
}

Vec3 Rotation::apply(const Vec3& v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

SpherePoint Rotation::apply(const SpherePoint& p) const { return SpherePoint(apply(p.vec())); }

}  // namespace lune
