#include "lune/boundary.hpp"

#include <algorithm>
#include <numeric>

namespace lune {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  return phi;
}

}  // namespace

SpherePoint BoundaryArc::point(double phi) const {
  return polar_offset(center, e1, e2, radius, phi);
}

bool BoundaryArc::is_full_circle() const { return sweep >= kTwoPi - 1e-12; }

SpherePoint BoundaryArc::pole(double phi) const {
  const Vec3 d = std::cos(phi) * e1 + std::sin(phi) * e2;
  return SpherePoint(std::sin(radius) * center.vec() - std::cos(radius) * d);
}

double BoundaryArc::angle_of(const SpherePoint& p) const {
  return wrap_angle(std::atan2(dot(p.vec(), e2), dot(p.vec(), e1)));
}

bool BoundaryArc::within(double phi, double slack) const {
  if (is_full_circle()) return true;
  return phi <= sweep + slack || phi >= kTwoPi - slack;
}

BoundaryArc::Extreme BoundaryArc::farthest_from(const SpherePoint& k) const {
  Extreme best{distance(k, start()), 0.0};
  if (!is_full_circle()) {
    const double de = distance(k, end());
    if (de > best.distance) best = {de, sweep};
  }
  const double a = dot(k.vec(), e1), b = dot(k.vec(), e2);
  if (std::hypot(a, b) > 1e-15) {
    const double phi = wrap_angle(std::atan2(b, a) + kPi);
    if (within(phi)) {
      const double d = distance(k, point(phi));
      if (d > best.distance) best = {d, phi};
    }
  }
  return best;
}

BoundaryArc::Extreme BoundaryArc::nearest_to(const SpherePoint& k) const {
  Extreme best{distance(k, start()), 0.0};
  if (!is_full_circle()) {
    const double de = distance(k, end());
    if (de < best.distance) best = {de, sweep};
  }
  const double a = dot(k.vec(), e1), b = dot(k.vec(), e2);
  if (std::hypot(a, b) > 1e-15) {
    const double phi = wrap_angle(std::atan2(b, a));
    if (within(phi)) {
      const double d = distance(k, point(phi));
      if (d < best.distance) best = {d, phi};
    }
  }
  return best;
}

BoundaryArc BoundaryArc::geodesic(const SpherePoint& a, const SpherePoint& b) {
  const Vec3 n = cross(a.vec(), b.vec());
  if (n.norm() < 1e-14) {
    throw GeometryError(ErrorCode::DegenerateInput, "geodesic edge with coincident or antipodal ends");
  }
  BoundaryArc arc;
  arc.center = SpherePoint(n);
  arc.radius = kHalfPi;
  arc.e1 = a.vec();
  arc.e2 = cross(arc.center.vec(), a.vec());
  arc.sweep = distance(a, b);
  return arc;
}

BoundaryArc BoundaryArc::circular(const SpherePoint& center, double radius, const SpherePoint& a,
                                  const SpherePoint& b) {
  BoundaryArc arc;
  arc.center = center;
  arc.radius = radius;
  const Vec3 t = a.vec() - dot(a, center) * center.vec();
  if (t.norm() < 1e-14) {
    throw GeometryError(ErrorCode::DegenerateInput, "arc endpoint coincides with its center");
  }
  arc.e1 = t * (1.0 / t.norm());
  arc.e2 = cross(center.vec(), arc.e1);
  arc.sweep = arc.angle_of(b);
  if (arc.sweep < 1e-15) arc.sweep = 0.0;
  return arc;
}

BoundaryArc BoundaryArc::full_circle(const SpherePoint& center, double radius) {
  const auto [e1, e2] = tangent_frame(center);
  BoundaryArc arc;
  arc.center = center;
  arc.radius = radius;
  arc.e1 = e1;
  arc.e2 = e2;
  arc.sweep = kTwoPi;
  return arc;
}

namespace {

template <typename Better>
FarthestPoint extreme_on_boundary(const Boundary& boundary, const SpherePoint& k, bool farthest,
                                  Better better) {
  FarthestPoint best{farthest ? -1.0 : 10.0, SpherePoint()};
  for (const auto& piece : boundary) {
    const auto e = farthest ? piece.farthest_from(k) : piece.nearest_to(k);
    const SpherePoint x = piece.point(e.phi);
    if (std::abs(e.distance - best.distance) <= 1e-14) {
      if (x.lex_less(best.point)) best.point = x;
    } else if (better(e.distance, best.distance)) {
      best = {e.distance, x};
    }
  }
  return best;
}

}  // namespace

FarthestPoint farthest_on_boundary(const Boundary& boundary, const SpherePoint& k) {
  return extreme_on_boundary(boundary, k, true, [](double a, double b) { return a > b; });
}

FarthestPoint nearest_on_boundary(const Boundary& boundary, const SpherePoint& k) {
  return extreme_on_boundary(boundary, k, false, [](double a, double b) { return a < b; });
}

double boundary_length(const Boundary& boundary) {
  double total = 0.0;
  for (const auto& piece : boundary) total += piece.length();
  return total;
}

std::vector<BoundaryParam> equidistributed_params(const Boundary& boundary, std::size_t n) {
  const std::size_t m = boundary.size();
  if (n < m) {
    throw GeometryError(ErrorCode::BadParameters, "sample count below number of boundary pieces");
  }
  const double total = boundary_length(boundary);
  std::vector<std::size_t> count(m, 1);
  const std::size_t extra = n - m;
  if (extra > 0 && total > 0) {
    std::vector<double> share(m);
    std::size_t used = 0;
    for (std::size_t i = 0; i < m; ++i) {
      share[i] = extra * boundary[i].length() / total;
      const auto whole = static_cast<std::size_t>(std::floor(share[i]));
      count[i] += whole;
      used += whole;
      share[i] -= static_cast<double>(whole);
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return share[a] > share[b]; });
    for (std::size_t i = 0; used < extra; ++i, ++used) ++count[order[i % m]];
  }
  std::vector<BoundaryParam> params;
  params.reserve(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < count[i]; ++j) {
      params.push_back({i, boundary[i].sweep * static_cast<double>(j) / count[i]});
    }
  }
  return params;
}

}  // namespace lune
