#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lune/boundary.hpp"
#include "lune/regions.hpp"
#include "lune/sphere.hpp"

namespace lune {

/// Geodesic polygon with strictly convex, positively oriented vertex cycle
/// (counterclockwise when viewed from outside the sphere).
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<SpherePoint> vertices, double eps_alg = Tolerance{}.eps_alg);

  const std::vector<SpherePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const SpherePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

 private:
  std::vector<SpherePoint> vertices_;
};

enum class EdgeKind { Geodesic, CircularArc };

/// Edge of a disk-polygon. Circular arcs run counterclockwise about their
/// center (the body lies inside the circle).
struct Edge {
  SpherePoint start;
  SpherePoint end;
  EdgeKind kind = EdgeKind::Geodesic;
  SpherePoint arc_center;
  double arc_radius = kHalfPi;

  static Edge geodesic(const SpherePoint& a, const SpherePoint& b) {
    return {a, b, EdgeKind::Geodesic, SpherePoint(), kHalfPi};
  }
  static Edge arc(const SpherePoint& a, const SpherePoint& b, const SpherePoint& center,
                  double radius) {
    return {a, b, EdgeKind::CircularArc, center, radius};
  }
};

/// Convex body bounded by geodesic and circular edges chained head to tail.
class DiskPolygon {
 public:
  explicit DiskPolygon(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<SpherePoint> vertices() const;

 private:
  std::vector<Edge> edges_;
};

using Body = std::variant<Cap, ConvexPolygon, DiskPolygon>;

/// Boundary pieces of a body (a cap yields one full circle).
Boundary boundary_of(const Body& body);

/// Vertices of polygons and disk-polygons (edge starts); empty for a cap.
std::vector<SpherePoint> body_vertices(const Body& body);

/// Normalized mean of the vertices, or the cap center.
SpherePoint centroid_direction(const Body& body);

Body transform(const Body& body, const Rotation& rotation);

// --- construction ---------------------------------------------------------

ConvexPolygon convex_hull(std::span<const SpherePoint> points, double eps_alg = Tolerance{}.eps_alg);

Body make_cap(const SpherePoint& center, double radius);

/// Sector of B_delta(center) spanned by two orthogonal radii, the first one
/// at angle `orientation` in the tangent frame at `center`.
Body make_quarter_disk(const SpherePoint& center, double delta, double orientation = 0.0);

/// Regular geodesic n-gon with the given circumradius.
ConvexPolygon make_regular_polygon(const SpherePoint& center, int n, double circumradius,
                                   double phase = 0.0);

/// Spherical Reuleaux n-gon (n odd) of constant width w. For w <= pi/2 the
/// edges are arcs of radius w about the opposite vertices; for w > pi/2 the
/// body is the polar of the Reuleaux n-gon of width pi - w.
Body make_reuleaux_odd_gon(const SpherePoint& center, int n, double width, double phase = 0.0);

/// Circumradius r of the regular n-gon whose vertex-to-opposite-edge distance is delta.
double regular_reduced_circumradius(int n, double delta);

/// Regular odd-gon of thickness delta.
Body make_regular_reduced_polygon(const SpherePoint& center, int n, double delta,
                                  double phase = 0.0);

// --- queries --------------------------------------------------------------

bool body_contains(const Body& body, const SpherePoint& p, double eps_alg = Tolerance{}.eps_alg);

/// Distance from p to the boundary of the body.
double boundary_distance(const Body& body, const SpherePoint& p);

/// 0 for points of the body, otherwise the distance to the body.
double outside_distance(const Body& body, const SpherePoint& p, double eps_alg = Tolerance{}.eps_alg);

/// n deterministic boundary points, equidistributed by arc length per edge,
/// always including every vertex.
std::vector<SpherePoint> boundary_sample(const Body& body, std::size_t n);

/// Farthest point of the body from k (max of |k x| over x in the body).
FarthestPoint farthest_point(const Body& body, const SpherePoint& k);
FarthestPoint farthest_point(const Body& body, const Boundary& boundary, const SpherePoint& k);

/// Poles of the supporting hemispheres at a boundary point: a single pole at
/// smooth points, otherwise the arc of poles between `first` and `last`
/// (counterclockwise about the vertex).
struct SupportSet {
  SpherePoint first;
  SpherePoint last;
  bool is_arc = false;

  /// Pole at fraction t in [0, 1] along the arc (first when not an arc).
  SpherePoint at(double t) const;
};

SupportSet supporting_poles_at(const Body& body, const SpherePoint& p,
                               double eps_alg = Tolerance{}.eps_alg);

}  // namespace lune
