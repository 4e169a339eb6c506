#pragma once

#include <vector>

#include "lune/sphere.hpp"

namespace lune {

/// One smooth piece of a body boundary: the arc of the circle of radius
/// `radius` about `center`, swept counterclockwise (seen from outside) from
/// direction e1 through `sweep` radians. Geodesic edges are the special case
/// radius = pi/2 with the edge's great-circle pole as center. The body always
/// lies on the center side of the circle.
struct BoundaryArc {
  SpherePoint center;
  double radius = kHalfPi;
  Vec3 e1;
  Vec3 e2;
  double sweep = 0.0;

  SpherePoint point(double phi) const;
  SpherePoint start() const { return point(0.0); }
  SpherePoint end() const { return point(sweep); }
  double length() const { return sweep * std::sin(radius); }
  bool is_geodesic() const { return std::abs(radius - kHalfPi) < 1e-12; }
  bool is_full_circle() const;

  /// Pole of the unique hemisphere supporting the circle at angle phi.
  SpherePoint pole(double phi) const;

  /// Angle phi (unwrapped into [0, 2pi)) of the projection of p onto the circle.
  double angle_of(const SpherePoint& p) const;
  bool within(double phi, double slack = 0.0) const;

  /// Extreme distances from k to the points of this arc.
  struct Extreme {
    double distance;
    double phi;
  };
  Extreme farthest_from(const SpherePoint& k) const;
  Extreme nearest_to(const SpherePoint& k) const;

  static BoundaryArc geodesic(const SpherePoint& a, const SpherePoint& b);
  /// Counterclockwise arc about `center` from a to b (sweep in (0, 2pi)).
  static BoundaryArc circular(const SpherePoint& center, double radius, const SpherePoint& a,
                              const SpherePoint& b);
  static BoundaryArc full_circle(const SpherePoint& center, double radius);
};

using Boundary = std::vector<BoundaryArc>;

struct FarthestPoint {
  double distance = 0.0;
  SpherePoint point;
};

/// max over the boundary of |k x|, with the maximizer. Ties are resolved
/// toward the lexicographically smallest point.
FarthestPoint farthest_on_boundary(const Boundary& boundary, const SpherePoint& k);

/// min over the boundary of |k x|.
FarthestPoint nearest_on_boundary(const Boundary& boundary, const SpherePoint& k);

double boundary_length(const Boundary& boundary);

/// Position along a boundary: piece index and angle on that piece.
struct BoundaryParam {
  std::size_t piece = 0;
  double phi = 0.0;
};

/// `n` parameters distributed over the pieces proportionally to arc length,
/// every piece receiving at least one (its start). Requires n >= pieces.
std::vector<BoundaryParam> equidistributed_params(const Boundary& boundary, std::size_t n);

}  // namespace lune
