#include "lune/bodies.hpp"

#include <algorithm>
#include <string>

#include "lune/width.hpp"

namespace lune {

namespace {

constexpr double kChainTolerance = 1e-9;

BoundaryArc piece_of(const Edge& edge) {
  if (edge.kind == EdgeKind::Geodesic) return BoundaryArc::geodesic(edge.start, edge.end);
  return BoundaryArc::circular(edge.arc_center, edge.arc_radius, edge.start, edge.end);
}

[[noreturn]] void invalid(const std::string& why) {
  throw GeometryError(ErrorCode::InvalidBody, why);
}

// Minimum-norm point of conv(points) in R^3 by Wolfe's active-set method.
// The active set stays affinely independent, so it never exceeds 4 points.
Vec3 min_norm_point(std::span<const SpherePoint> points) {
  std::vector<Vec3> active{points[0].vec()};
  std::vector<double> lambda{1.0};
  Vec3 x = active[0];
  for (int outer = 0; outer < 100; ++outer) {
    Vec3 cand = points[0].vec();
    double low_dot = dot(x, cand);
    for (const auto& p : points) {
      const double d = dot(x, p.vec());
      if (d < low_dot) low_dot = d, cand = p.vec();
    }
    if (dot(x, x) - low_dot <= 1e-15 || active.size() == 4) break;
    if (std::any_of(active.begin(), active.end(), [&](const Vec3& a) { return (a - cand).norm() < 1e-15; })) break;
    active.push_back(cand);
    lambda.push_back(0.0);
    for (int inner = 0; inner < 8; ++inner) {
      // Affine minimizer: [G 1; 1' 0] [mu; t] = [0; 1].
      const std::size_t m = active.size();
      double a[5][6] = {};
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = dot(active[i], active[j]);
        a[i][m] = 1.0;
        a[m][i] = 1.0;
      }
      a[m][m + 1] = 1.0;
      bool singular = false;
      for (std::size_t c = 0; c <= m; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r <= m; ++r) {
          if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        }
        if (std::abs(a[piv][c]) < 1e-300) {
          singular = true;
          break;
        }
        std::swap(a[c], a[piv]);
        for (std::size_t r = 0; r <= m; ++r) {
          if (r == c) continue;
          const double f = a[r][c] / a[c][c];
          for (std::size_t k = c; k <= m + 1; ++k) a[r][k] -= f * a[c][k];
        }
      }
      if (singular) break;
      std::vector<double> mu(m);
      for (std::size_t i = 0; i < m; ++i) mu[i] = a[i][m + 1] / a[i][i];
      if (std::all_of(mu.begin(), mu.end(), [](double v) { return v > 0.0; })) {
        lambda = mu;
        break;
      }
      // Step toward the affine minimizer until a weight hits zero, drop it.
      double theta = 1.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (mu[i] <= 0.0) theta = std::min(theta, lambda[i] / (lambda[i] - mu[i]));
      }
      for (std::size_t i = 0; i < m; ++i) lambda[i] = (1 - theta) * lambda[i] + theta * mu[i];
      for (std::size_t i = m; i-- > 0;) {
        if (lambda[i] <= 1e-16) {
          active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
          lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }
    x = Vec3{0, 0, 0};
    for (std::size_t i = 0; i < active.size(); ++i) x = x + active[i] * lambda[i];
  }
  return x;
}

// Pole of the widest open hemisphere holding every point: the normalized
// minimum-norm point of their convex hull. Empty when the hull reaches the
// origin.
std::optional<SpherePoint> hemisphere_pole(std::span<const SpherePoint> points) {
  if (points.empty()) return std::nullopt;
  const Vec3 x = min_norm_point(points);
  const double n = x.norm();
  if (n < 1e-12) return std::nullopt;
  for (const auto& p : points) {
    if (dot(p.vec(), x) <= 1e-12 * n) return std::nullopt;
  }
  return SpherePoint(x);
}

void require_open_hemisphere(std::span<const SpherePoint> points) {
  if (!hemisphere_pole(points)) {
    throw GeometryError(ErrorCode::NotInOpenHemisphere, "body not inside an open hemisphere");
  }
}

}  // namespace

// --- ConvexPolygon --------------------------------------------------------

ConvexPolygon::ConvexPolygon(std::vector<SpherePoint> vertices, double eps_alg)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) invalid("a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[(i + n - 1) % n];
    const auto& b = vertices_[i];
    const auto& c = vertices_[(i + 1) % n];
    if (orient(a, b, c, eps_alg) <= 0) {
      invalid("vertex " + std::to_string(i) + " is not a strictly convex, positively oriented corner");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    for (const auto& v : vertices_) {
      if (triple(a, b, v) < -eps_alg) invalid("vertex cycle is not convex");
    }
  }
  require_open_hemisphere(vertices_);
}

// --- DiskPolygon ----------------------------------------------------------

DiskPolygon::DiskPolygon(std::vector<Edge> edges) : edges_(std::move(edges)) {
  const std::size_t n = edges_.size();
  if (n < 2) invalid("a disk-polygon needs at least 2 edges");
  Boundary pieces;
  pieces.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = edges_[i];
    if (distance(e.end, edges_[(i + 1) % n].start) > kChainTolerance) {
      invalid("edge " + std::to_string(i) + " does not chain to the next edge");
    }
    if (e.kind == EdgeKind::CircularArc) {
      if (!(e.arc_radius > 0.0) || e.arc_radius > kHalfPi + 1e-12) {
        invalid("arc radius must lie in (0, pi/2]");
      }
      if (std::abs(distance(e.arc_center, e.start) - e.arc_radius) > kChainTolerance ||
          std::abs(distance(e.arc_center, e.end) - e.arc_radius) > kChainTolerance) {
        invalid("arc endpoints are not on the arc circle");
      }
    }
    try {
      pieces.push_back(piece_of(e));
    } catch (const GeometryError&) {
      invalid("edge " + std::to_string(i) + " is degenerate");
    }
    if (!(pieces.back().sweep > 0.0) || pieces.back().sweep >= kPi) {
      invalid("edge " + std::to_string(i) + " must subtend less than pi of its circle");
    }
  }

  // Convexity and orientation: every sampled supporting hemisphere contains
  // every sampled boundary point, and every corner turns counterclockwise.
  std::vector<SpherePoint> points;
  std::vector<SpherePoint> poles;
  for (std::size_t i = 0; i < n; ++i) {
    const BoundaryArc& piece = pieces[i];
    const BoundaryArc& prev = pieces[(i + n - 1) % n];
    const SpherePoint v = piece.start();
    const SpherePoint k_in = prev.pole(prev.sweep);
    const SpherePoint k_out = piece.pole(0.0);
    if (triple(v, k_in, k_out) < -1e-9) invalid("corner " + std::to_string(i) + " is reflex");
    if (distance(k_in, k_out) > 1e-12) poles.push_back(interpolate(k_in, k_out, 0.5));
    for (int j = 0; j < 8; ++j) points.push_back(piece.point(piece.sweep * j / 8.0));
    for (double t : {0.0, 0.5, 1.0}) poles.push_back(piece.pole(piece.sweep * t));
  }
  for (const auto& k : poles) {
    for (const auto& x : points) {
      if (dot(x, k) < -1e-9) invalid("boundary is not convex or not positively oriented");
    }
  }
  require_open_hemisphere(points);
}

std::vector<SpherePoint> DiskPolygon::vertices() const {
  std::vector<SpherePoint> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.start);
  return out;
}

// --- Body helpers ---------------------------------------------------------

Boundary boundary_of(const Body& body) {
  Boundary out;
  if (const auto* cap = std::get_if<Cap>(&body)) {
    out.push_back(BoundaryArc::full_circle(cap->center(), cap->radius()));
  } else if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    const auto& v = poly->vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(BoundaryArc::geodesic(v[i], v[(i + 1) % v.size()]));
    }
  } else {
    for (const auto& e : std::get<DiskPolygon>(body).edges()) out.push_back(piece_of(e));
  }
  return out;
}

std::vector<SpherePoint> body_vertices(const Body& body) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) return poly->vertices();
  if (const auto* disk = std::get_if<DiskPolygon>(&body)) return disk->vertices();
  return {};
}

SpherePoint centroid_direction(const Body& body) {
  if (const auto* cap = std::get_if<Cap>(&body)) return cap->center();
  Vec3 sum;
  for (const auto& v : body_vertices(body)) sum += v.vec();
  return SpherePoint(sum);
}

Body transform(const Body& body, const Rotation& rotation) {
  if (const auto* cap = std::get_if<Cap>(&body)) {
    return Cap(rotation.apply(cap->center()), cap->radius());
  }
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    std::vector<SpherePoint> v;
    for (const auto& p : poly->vertices()) v.push_back(rotation.apply(p));
    return ConvexPolygon(std::move(v));
  }
  std::vector<Edge> edges;
  for (Edge e : std::get<DiskPolygon>(body).edges()) {
    e.start = rotation.apply(e.start);
    e.end = rotation.apply(e.end);
    e.arc_center = rotation.apply(e.arc_center);
    edges.push_back(e);
  }
  return DiskPolygon(std::move(edges));
}

// --- construction ---------------------------------------------------------

ConvexPolygon convex_hull(std::span<const SpherePoint> points, double eps_alg) {
  if (points.size() < 3) {
    throw GeometryError(ErrorCode::DegenerateInput, "convex hull needs at least 3 points");
  }
  const auto found = hemisphere_pole(points);
  if (!found) {
    throw GeometryError(ErrorCode::NotInOpenHemisphere, "points are not inside an open hemisphere");
  }
  const SpherePoint pole = *found;
  const auto [e1, e2] = tangent_frame(pole);

  // Gnomonic projection preserves convexity and orientation inside H(pole).
  struct Projected {
    double x, y;
    SpherePoint p;
  };
  std::vector<Projected> pts;
  for (const auto& p : points) {
    const double h = dot(p.vec(), pole.vec());
    pts.push_back({dot(p.vec(), e1) / h, dot(p.vec(), e2) / h, p});
  }
  std::sort(pts.begin(), pts.end(), [](const Projected& a, const Projected& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Projected& a, const Projected& b) {
                          return distance(a.p, b.p) < 1e-12;
                        }),
            pts.end());

  std::vector<SpherePoint> hull;
  auto build = [&](auto first, auto last) {
    const std::size_t base = hull.size();
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= base + 2 &&
             triple(hull[hull.size() - 2], hull.back(), it->p) <= eps_alg) {
        hull.pop_back();
      }
      hull.push_back(it->p);
    }
    hull.pop_back();
  };
  build(pts.begin(), pts.end());
  build(pts.rbegin(), pts.rend());
  if (hull.size() < 3) {
    throw GeometryError(ErrorCode::DegenerateInput, "points lie on one great circle");
  }
  return ConvexPolygon(std::move(hull), eps_alg);
}

Body make_cap(const SpherePoint& center, double radius) { return Cap(center, radius); }

Body make_quarter_disk(const SpherePoint& center, double delta, double orientation) {
  if (!(delta > 0.0 && delta < kHalfPi)) {
    throw GeometryError(ErrorCode::BadThickness, "quarter-disk radius must lie in (0, pi/2)");
  }
  const auto [e1, e2] = tangent_frame(center);
  const SpherePoint a = polar_offset(center, e1, e2, delta, orientation);
  const SpherePoint b = polar_offset(center, e1, e2, delta, orientation + kHalfPi);
  return DiskPolygon({Edge::geodesic(center, a), Edge::arc(a, b, center, delta),
                      Edge::geodesic(b, center)});
}

ConvexPolygon make_regular_polygon(const SpherePoint& center, int n, double circumradius,
                                   double phase) {
  if (n < 3 || !(circumradius > 0.0 && circumradius < kHalfPi)) {
    throw GeometryError(ErrorCode::BadParameters, "regular polygon needs n >= 3 and r in (0, pi/2)");
  }
  const auto [e1, e2] = tangent_frame(center);
  std::vector<SpherePoint> v;
  for (int i = 0; i < n; ++i) {
    v.push_back(polar_offset(center, e1, e2, circumradius, phase + 2.0 * kPi * i / n));
  }
  return ConvexPolygon(std::move(v));
}

Body make_reuleaux_odd_gon(const SpherePoint& center, int n, double width, double phase) {
  if (n < 3 || n % 2 == 0) {
    throw GeometryError(ErrorCode::BadParameters, "Reuleaux polygons need an odd n >= 3");
  }
  const double max_width = n == 3 ? 2.0 * kPi / 3.0 : kHalfPi;
  if (!(width > 0.0) || width > max_width + 1e-12) {
    throw GeometryError(ErrorCode::BadParameters,
                        "Reuleaux width out of range (0, " + std::to_string(max_width) + "]");
  }
  if (width > kHalfPi + 1e-12) {
    return polar(make_reuleaux_odd_gon(center, n, kPi - width, phase));
  }
  // Long diagonal w of the regular n-gon with circumradius r:
  // cos w = cos^2 r - sin^2 r cos(pi/n).
  const double s2 = (1.0 - std::cos(width)) / (1.0 + std::cos(kPi / n));
  const double r = std::asin(std::sqrt(s2));
  const auto v = make_regular_polygon(center, n, r, phase).vertices();
  const bool geodesic = std::abs(width - kHalfPi) <= 1e-12;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    if (geodesic) {
      edges.push_back(Edge::geodesic(a, b));
    } else {
      edges.push_back(Edge::arc(a, b, v[(i + (n + 1) / 2) % n], width));
    }
  }
  return DiskPolygon(std::move(edges));
}

double regular_reduced_circumradius(int n, double delta) {
  if (n < 3 || n % 2 == 0 || !(delta > 0.0 && delta < kHalfPi)) {
    throw GeometryError(ErrorCode::BadParameters,
                        "reduced regular polygons need an odd n >= 3 and delta in (0, pi/2)");
  }
  const double c = std::cos(kPi / n);
  auto f = [&](double r) { return r + std::atan(std::tan(r) * c) - delta; };
  double lo = 0.0, hi = delta;
  if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
    throw GeometryError(ErrorCode::NoSolution, "cannot bracket the circumradius");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Body make_regular_reduced_polygon(const SpherePoint& center, int n, double delta, double phase) {
  return make_regular_polygon(center, n, regular_reduced_circumradius(n, delta), phase);
}

// --- queries --------------------------------------------------------------

bool body_contains(const Body& body, const SpherePoint& p, double eps_alg) {
  if (const auto* cap = std::get_if<Cap>(&body)) {
    return distance(cap->center(), p) <= cap->radius() + eps_alg;
  }
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    const auto& v = poly->vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (triple(v[i], v[(i + 1) % v.size()], p) < -eps_alg) return false;
    }
    return true;
  }
  // A disk-polygon is its vertex polygon plus the circular segments cut off
  // by the chords of its arc edges.
  const auto& edges = std::get<DiskPolygon>(body).edges();
  bool in_core = edges.size() >= 3;
  for (std::size_t i = 0; in_core && i < edges.size(); ++i) {
    if (distance(edges[i].start, edges[i].end) < 1e-12) continue;
    if (triple(edges[i].start, edges[i].end, p) < -eps_alg) in_core = false;
  }
  if (in_core) return true;
  for (const auto& e : edges) {
    if (e.kind != EdgeKind::CircularArc) continue;
    if (distance(e.arc_center, p) <= e.arc_radius + eps_alg &&
        triple(e.start, e.end, p) <= eps_alg) {
      return true;
    }
  }
  return false;
}

double boundary_distance(const Body& body, const SpherePoint& p) {
  return nearest_on_boundary(boundary_of(body), p).distance;
}

double outside_distance(const Body& body, const SpherePoint& p, double eps_alg) {
  if (body_contains(body, p, eps_alg)) return 0.0;
  return boundary_distance(body, p);
}

std::vector<SpherePoint> boundary_sample(const Body& body, std::size_t n) {
  const Boundary boundary = boundary_of(body);
  if (std::holds_alternative<Cap>(body) && n < 3) {
    throw GeometryError(ErrorCode::BadParameters, "a cap needs at least 3 boundary samples");
  }
  std::vector<SpherePoint> out;
  out.reserve(n);
  for (const auto& param : equidistributed_params(boundary, n)) {
    out.push_back(boundary[param.piece].point(param.phi));
  }
  return out;
}

FarthestPoint farthest_point(const Body& body, const Boundary& boundary, const SpherePoint& k) {
  if (body_contains(body, -k, 0.0)) return {kPi, -k};
  return farthest_on_boundary(boundary, k);
}

FarthestPoint farthest_point(const Body& body, const SpherePoint& k) {
  return farthest_point(body, boundary_of(body), k);
}

SpherePoint SupportSet::at(double t) const {
  if (!is_arc) return first;
  return interpolate(first, last, t);
}

SupportSet supporting_poles_at(const Body& body, const SpherePoint& p, double eps_alg) {
  const Boundary boundary = boundary_of(body);
  std::size_t best = 0;
  BoundaryArc::Extreme near{10.0, 0.0};
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const auto e = boundary[i].nearest_to(p);
    if (e.distance < near.distance) {
      near = e;
      best = i;
    }
  }
  if (near.distance > std::max(eps_alg, 1e-9)) {
    throw GeometryError(ErrorCode::NotOnBoundary, "point is not on the body boundary");
  }
  const std::size_t m = boundary.size();
  const BoundaryArc& piece = boundary[best];
  if (!piece.is_full_circle()) {
    std::optional<std::size_t> corner;
    if (distance(p, piece.start()) <= 1e-9) corner = best;
    else if (distance(p, piece.end()) <= 1e-9) corner = (best + 1) % m;
    if (corner) {
      const BoundaryArc& prev = boundary[(*corner + m - 1) % m];
      const SpherePoint k_in = prev.pole(prev.sweep);
      const SpherePoint k_out = boundary[*corner].pole(0.0);
      if (distance(k_in, k_out) > 1e-12) return {k_in, k_out, true};
      return {k_out, k_out, false};
    }
  }
  const SpherePoint k = piece.pole(near.phi);
  return {k, k, false};
}

}  // namespace lune
