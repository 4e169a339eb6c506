#include "lune/regions.hpp"

#include <string>

namespace lune {

Cap::Cap(const SpherePoint& center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || radius > kHalfPi + 1e-15) {
    throw GeometryError(ErrorCode::BadRadius, "cap radius must lie in (0, pi/2], got " +
                                                  std::to_string(radius));
  }
}

Lune::Lune(const SpherePoint& g, const SpherePoint& h, double eps_alg) : g_(g), h_(h) {
  const double d = distance(g, h);
  if (d < eps_alg || d > kPi - eps_alg) {
    throw GeometryError(ErrorCode::DegenerateLune, "hemispheres coincide or are opposite");
  }
}

double lune_thickness(const Lune& lune) { return kPi - distance(lune.g(), lune.h()); }

std::pair<SpherePoint, SpherePoint> lune_bounding_centers(const Lune& lune) {
  const Vec3& g = lune.g().vec();
  const Vec3& h = lune.h().vec();
  const double gh = dot(g, h);
  return {SpherePoint(h - gh * g), SpherePoint(g - gh * h)};
}

std::pair<SpherePoint, SpherePoint> lune_corners(const Lune& lune) {
  SpherePoint c(cross(lune.g().vec(), lune.h().vec()));
  return {c, -c};
}

bool region_contains(const Region& region, const SpherePoint& p, double eps_alg) {
  struct Visitor {
    const SpherePoint& p;
    double eps;
    bool operator()(const Hemisphere& h) const { return dot(p, h.pole) >= -eps; }
    bool operator()(const Cap& c) const { return distance(c.center(), p) <= c.radius() + eps; }
    bool operator()(const Lune& l) const {
      return dot(p, l.g()) >= -eps && dot(p, l.h()) >= -eps;
    }
  };
  return std::visit(Visitor{p, eps_alg}, region);
}

}  // namespace lune
