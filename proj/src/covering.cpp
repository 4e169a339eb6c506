#include "lune/covering.hpp"

#include <algorithm>
#include <limits>

#include "lune/width.hpp"
#include "optimize.hpp"

namespace lune {

namespace {

constexpr double kCoverSlack = 1e-12;

struct Candidate {
  double radius;
  std::uint32_t i, j, k;  // k == j marks a pair
};

std::optional<Circle> circle_of(const std::vector<SpherePoint>& pts, const Candidate& c) {
  const SpherePoint& a = pts[c.i];
  const SpherePoint& b = pts[c.j];
  if (c.k == c.j) {
    return Circle{SpherePoint(a.vec() + b.vec()), 0.5 * distance(a, b)};
  }
  const SpherePoint& p = pts[c.k];
  Vec3 n = cross(b.vec() - a.vec(), p.vec() - a.vec());
  if (n.norm() < 1e-15) return std::nullopt;
  if (dot(n, a.vec()) < 0) n = -n;
  const SpherePoint center(n);
  return Circle{center, distance(center, a)};
}

}  // namespace

CoverResult min_enclosing_cap(std::span<const SpherePoint> input) {
  std::vector<SpherePoint> pts;
  for (const auto& p : input) {
    if (std::none_of(pts.begin(), pts.end(),
                     [&](const SpherePoint& q) { return distance(p, q) < 1e-13; })) {
      pts.push_back(p);
    }
  }
  if (pts.empty()) throw GeometryError(ErrorCode::DegenerateInput, "no points to cover");
  if (pts.size() == 1) return {pts[0], 0.0, {pts[0]}};

  const auto m = static_cast<std::uint32_t>(pts.size());
  // Any cover has radius at least half the largest pairwise distance.
  double half_diameter = 0.0;
  std::vector<Candidate> candidates;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d > kPi - 1e-9) {
        throw GeometryError(ErrorCode::NotInOpenHemisphere, "antipodal points cannot be covered");
      }
      half_diameter = std::max(half_diameter, 0.5 * d);
      candidates.push_back({0.5 * d, i, j, j});
    }
  }
  const double floor_radius = half_diameter - 1e-12;
  std::erase_if(candidates, [&](const Candidate& c) { return c.radius < floor_radius; });
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) {
      for (std::uint32_t k = j + 1; k < m; ++k) {
        Vec3 n = cross(pts[j].vec() - pts[i].vec(), pts[k].vec() - pts[i].vec());
        const double nn = n.norm();
        if (nn < 1e-15) continue;
        if (dot(n, pts[i].vec()) < 0) n = -n;
        // cos(radius) = n.a / |n|
        const double r = std::acos(std::clamp(dot(n, pts[i].vec()) / nn, -1.0, 1.0));
        if (r < floor_radius || r >= kHalfPi) continue;
        candidates.push_back({r, i, j, k});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });

  // Check candidates in increasing radius; recent violators are tried first.
  std::vector<std::uint32_t> order(m);
  for (std::uint32_t i = 0; i < m; ++i) order[i] = i;
  for (const auto& cand : candidates) {
    const auto circle = circle_of(pts, cand);
    if (!circle) continue;
    const double limit = std::cos(circle->radius + kCoverSlack);
    bool covers = true;
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (dot(pts[order[t]], circle->center) < limit) {
        std::rotate(order.begin(), order.begin() + t, order.begin() + t + 1);
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    CoverResult out{circle->center, circle->radius, {pts[cand.i], pts[cand.j]}};
    if (cand.k != cand.j) out.support.push_back(pts[cand.k]);
    return out;
  }
  throw GeometryError(ErrorCode::NotInOpenHemisphere, "no covering cap below pi/2");
}

CoverResult min_enclosing_cap(const Body& body, const Tolerance& tol) {
  (void)tol;
  if (const auto* cap = std::get_if<Cap>(&body)) {
    const auto ring = boundary_sample(body, 3);
    return {cap->center(), cap->radius(), ring};
  }
  // Caps under a hemisphere are convex, so a polygon is covered iff its vertices are.
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) return min_enclosing_cap(poly->vertices());
  const Boundary boundary = boundary_of(body);
  std::vector<SpherePoint> seeds = boundary_sample(body, 64);
  for (const auto& v : body_vertices(body)) seeds.push_back(v);
  CoverResult cover = min_enclosing_cap(std::span<const SpherePoint>(seeds));

  // Exchange refinement against the exact boundary: keep the determining
  // points, add every point the current cap misses, re-solve.
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<SpherePoint> active = cover.support;
    double reach = 0.0;
    for (const auto& piece : boundary) {
      const auto far = piece.farthest_from(cover.center);
      reach = std::max(reach, far.distance);
      if (far.distance > cover.radius + kCoverSlack) active.push_back(piece.point(far.phi));
    }
    if (reach - cover.radius <= 1e-13) break;
    CoverResult next = min_enclosing_cap(std::span<const SpherePoint>(active));
    if (next.radius <= cover.radius) {
      cover.radius = reach;
      break;
    }
    cover = std::move(next);
  }
  // Report a radius that provably covers every boundary point.
  double reach = 0.0;
  for (const auto& piece : boundary) reach = std::max(reach, piece.farthest_from(cover.center).distance);
  cover.radius = std::max(cover.radius, reach);
  if (cover.radius >= kHalfPi) {
    throw GeometryError(ErrorCode::NotInOpenHemisphere, "covering cap radius reaches pi/2");
  }
  return cover;
}

BoundaryCover boundary_centered_cover(const Body& body) {
  const Boundary boundary = boundary_of(body);
  auto reach = [&](std::size_t i, double phi) {
    return farthest_point(body, boundary, boundary[i].point(phi)).distance;
  };
  const auto params = equidistributed_params(boundary, std::max<std::size_t>(512, boundary.size()));
  std::vector<double> values(params.size());
  for (std::size_t s = 0; s < params.size(); ++s) values[s] = reach(params[s].piece, params[s].phi);

  detail::Located best{std::numeric_limits<double>::infinity(), 0, 0.0};
  const std::size_t n = params.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (values[s] < best.value) best = {values[s], params[s].piece, params[s].phi};
  }
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t l = (s + n - 1) % n, r = (s + 1) % n;
    if (values[s] > values[l] || values[s] > values[r]) continue;
    if (values[s] > best.value + 1e-3) continue;
    const BoundaryArc& piece = boundary[params[s].piece];
    // Polish on the piece containing the sample, within one sample spacing.
    const double spacing = boundary_length(boundary) / n / std::max(std::sin(piece.radius), 1e-9);
    double a = params[s].phi - spacing, b = params[s].phi + spacing;
    if (!piece.is_full_circle()) {
      a = std::max(a, 0.0);
      b = std::min(b, piece.sweep);
    }
    const auto [phi, v] = detail::golden_min([&](double t) { return reach(params[s].piece, t); }, a, b);
    if (v < best.value) best = {v, params[s].piece, phi};
  }
  return {boundary[best.piece].point(best.phi), best.value};
}

double dekster_cover_radius(double width) {
  return std::asin(2.0 * std::sqrt(3.0) / 3.0 * std::sin(width / 2.0));
}

double wide_constant_width_cover_radius(double width) {
  return width + std::asin(2.0 * std::sqrt(3.0) / 3.0 * std::cos(width / 2.0)) - kHalfPi;
}

double reduced_cover_radius(double thickness) {
  return std::atan(std::sqrt(2.0) * std::tan(thickness / 2.0));
}

BoundReport covering_bound_report(const Body& body, std::optional<Regime> assumed,
                                  const Tolerance& tol) {
  BoundReport report;
  report.thickness = thickness(body, tol).thickness;
  const double w = report.thickness;
  report.constant_width = assumed == Regime::ConstantWidth ||
                          is_constant_width(body, w, tol.eps_claim).holds;
  report.reduced = report.constant_width || assumed == Regime::Reduced;
  if (!report.reduced && std::holds_alternative<ConvexPolygon>(body) && w < kHalfPi) {
    report.reduced = reducedness_certificate(body, tol.eps_claim, tol).verdict ==
                     ReducednessVerdict::CertifiedConsistentWithReduced;
  }
  if (report.constant_width && w <= 2.0 * kPi / 3.0 + 1e-12) {
    report.bounds.push_back({"dekster", dekster_cover_radius(w), 0.0, false});
  }
  if (report.constant_width && w >= kHalfPi - 1e-12) {
    report.bounds.push_back({"constant_width_wide", wide_constant_width_cover_radius(w), 0.0, false});
  }
  if (report.reduced && w <= kHalfPi + 1e-12) {
    report.bounds.push_back({"reduced", reduced_cover_radius(w), 0.0, false});
  }
  if (report.bounds.empty()) {
    throw GeometryError(ErrorCode::RegimeUnknown,
                        "body is neither of constant width nor reduced in a covered range");
  }
  report.measured_radius = min_enclosing_cap(body, tol).radius;
  report.holds = true;
  for (auto& b : report.bounds) {
    b.slack = b.value - report.measured_radius;
    b.holds = report.measured_radius <= b.value + tol.eps_claim;
    report.holds = report.holds && b.holds;
  }
  return report;
}

}  // namespace lune
