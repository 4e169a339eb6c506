#include "lune/width.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "optimize.hpp"

namespace lune {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr int kSeedsPerPiece = 33;
constexpr std::size_t kScanSamples = 2000;

// A body together with its polar and both boundaries, so that repeated
// width evaluations do not rebuild them.
struct PolarView {
  Body body;
  Boundary boundary;
  Body dual;
  Boundary dual_boundary;

  explicit PolarView(const Body& b)
      : body(b), boundary(boundary_of(b)), dual(polar(b)), dual_boundary(boundary_of(dual)) {}

  // width_K for K = H(k), k on bd(polar).
  WidthResult width(const SpherePoint& k) const {
    const FarthestPoint f = farthest_point(dual, dual_boundary, k);
    return {kPi - f.distance, {k, f.point}};
  }
};

}  // namespace

// --- polar ----------------------------------------------------------------

Body polar(const Body& body) {
  if (const auto* cap = std::get_if<Cap>(&body)) {
    if (cap->radius() >= kHalfPi - 1e-15) {
      throw GeometryError(ErrorCode::NotInOpenHemisphere, "the polar of a hemisphere is a point");
    }
    return Cap(cap->center(), kHalfPi - cap->radius());
  }
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    const auto& v = poly->vertices();
    std::vector<SpherePoint> poles;
    for (std::size_t i = 0; i < v.size(); ++i) {
      poles.emplace_back(cross(v[i].vec(), v[(i + 1) % v.size()].vec()));
    }
    return ConvexPolygon(std::move(poles));
  }
  // Walk the boundary: a corner sweeps a geodesic arc of poles, a circular
  // arc (q, r) sweeps the arc (q, pi/2 - r), a geodesic edge fixes one pole.
  const Boundary boundary = boundary_of(body);
  const std::size_t n = boundary.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const BoundaryArc& prev = boundary[(i + n - 1) % n];
    const BoundaryArc& piece = boundary[i];
    const SpherePoint k_in = prev.pole(prev.sweep);
    const SpherePoint k_out = piece.pole(0.0);
    // Joins closer than this are smooth; shorter edges would carry noise-level poles.
    if (distance(k_in, k_out) > 1e-10) edges.push_back(Edge::geodesic(k_in, k_out));
    const double r = kHalfPi - piece.radius;
    if (r > 1e-12) {
      edges.push_back(Edge::arc(piece.pole(0.0), piece.pole(piece.sweep), piece.center, r));
    }
  }
  if (edges.size() < 2) {
    throw GeometryError(ErrorCode::DegenerateInput, "polar body has no interior");
  }
  return DiskPolygon(std::move(edges));
}

Body polar_rho(std::span<const SpherePoint> input, double rho) {
  if (!(rho > 0.0) || rho > kHalfPi + 1e-15) {
    throw GeometryError(ErrorCode::BadRadius, "polar radius must lie in (0, pi/2]");
  }
  std::vector<SpherePoint> centers;
  for (const auto& p : input) {
    if (std::none_of(centers.begin(), centers.end(),
                     [&](const SpherePoint& c) { return distance(c, p) < 1e-12; })) {
      centers.push_back(p);
    }
  }
  if (centers.empty()) throw GeometryError(ErrorCode::DegenerateInput, "no points");
  if (centers.size() == 1) return Cap(centers[0], rho);

  const double cr = std::cos(rho), sr = std::sin(rho);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const auto [e1, e2] = tangent_frame(centers[i]);
    // Feasible angles on circle i, as disjoint intervals of [0, 2pi).
    std::vector<std::pair<double, double>> feasible{{0.0, kTwoPi}};
    for (std::size_t j = 0; j < centers.size() && !feasible.empty(); ++j) {
      if (j == i) continue;
      const Vec3& cj = centers[j].vec();
      const double a = dot(e1, cj), b = dot(e2, cj);
      const double R = std::hypot(a, b);
      const double rhs = cr - cr * dot(centers[i].vec(), cj);
      if (R * sr < 1e-15) {
        if (rhs > 1e-15) feasible.clear();
        continue;
      }
      const double tau = rhs / (sr * R);
      if (tau <= -1.0) continue;
      if (tau >= 1.0) {
        feasible.clear();
        break;
      }
      const double alpha = std::acos(tau);
      double lo = std::atan2(b, a) - alpha;
      lo = std::fmod(lo, kTwoPi);
      if (lo < 0) lo += kTwoPi;
      std::vector<std::pair<double, double>> window;
      if (lo + 2 * alpha <= kTwoPi) {
        window.push_back({lo, lo + 2 * alpha});
      } else {
        window.push_back({lo, kTwoPi});
        window.push_back({0.0, lo + 2 * alpha - kTwoPi});
      }
      std::vector<std::pair<double, double>> next;
      for (const auto& f : feasible) {
        for (const auto& w : window) {
          const double s = std::max(f.first, w.first), e = std::min(f.second, w.second);
          if (e > s) next.push_back({s, e});
        }
      }
      feasible = std::move(next);
    }
    if (feasible.size() == 1 && feasible[0].first <= 0.0 && feasible[0].second >= kTwoPi) {
      return Cap(centers[i], rho);
    }
    // Merge the interval that wraps through angle 0.
    std::sort(feasible.begin(), feasible.end());
    if (feasible.size() >= 2 && feasible.front().first <= 0.0 && feasible.back().second >= kTwoPi) {
      feasible.front().first = feasible.back().first - kTwoPi;
      feasible.pop_back();
    }
    for (const auto& [s, e] : feasible) {
      if (e - s < 1e-12) continue;
      const int parts = static_cast<int>(std::ceil((e - s) / (0.45 * kPi)));
      for (int k = 0; k < parts; ++k) {
        const double ps = s + (e - s) * k / parts, pe = s + (e - s) * (k + 1) / parts;
        const SpherePoint a = polar_offset(centers[i], e1, e2, rho, ps);
        const SpherePoint b = polar_offset(centers[i], e1, e2, rho, pe);
        if (std::abs(rho - kHalfPi) < 1e-12) {
          edges.push_back(Edge::geodesic(a, b));
        } else {
          edges.push_back(Edge::arc(a, b, centers[i], rho));
        }
      }
    }
  }
  if (edges.size() < 2) {
    throw GeometryError(ErrorCode::EmptyResult, "the caps have no common interior");
  }
  // Chain the edges head to tail.
  std::vector<Edge> chain{edges.front()};
  std::vector<bool> used(edges.size(), false);
  used[0] = true;
  for (std::size_t step = 1; step < edges.size(); ++step) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (used[j]) continue;
      const double d = distance(chain.back().end, edges[j].start);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best_d > 1e-7) {
      throw GeometryError(ErrorCode::EmptyResult, "cap intersection boundary does not close");
    }
    used[best] = true;
    chain.push_back(edges[best]);
  }
  // Snap tiny chaining gaps so the disk-polygon validates.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Edge& next = chain[(i + 1) % chain.size()];
    next.start = chain[i].end;
  }
  double perimeter = 0.0;
  for (const auto& e : chain) perimeter += distance(e.start, e.end);
  if (perimeter < 1e-9) throw GeometryError(ErrorCode::EmptyResult, "intersection is a point");
  try {
    return DiskPolygon(std::move(chain));
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorCode::EmptyResult, std::string("degenerate intersection: ") + e.what());
  }
}

Body polar_rho(const Body& body, double rho, const Tolerance& tol) {
  if (const auto* cap = std::get_if<Cap>(&body)) {
    if (rho <= cap->radius()) {
      throw GeometryError(ErrorCode::EmptyResult, "cap is wider than the polar radius");
    }
    return Cap(cap->center(), rho - cap->radius());
  }
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    return polar_rho(std::span<const SpherePoint>(poly->vertices()), rho);
  }
  // Disk-polygon: refine the sampled intersection until it stops moving.
  std::size_t n = std::max<std::size_t>(64, std::get<DiskPolygon>(body).edges().size());
  Body current = polar_rho(std::span<const SpherePoint>(boundary_sample(body, n)), rho);
  for (int round = 0; round < 6; ++round) {
    n *= 2;
    Body next = polar_rho(std::span<const SpherePoint>(boundary_sample(body, n)), rho);
    double change = 0.0;
    for (const auto& p : boundary_sample(next, 256)) {
      change = std::max(change, boundary_distance(current, p));
    }
    current = std::move(next);
    if (change < tol.eps_opt) break;
  }
  return current;
}

// --- width ----------------------------------------------------------------

WidthResult width_at(const Body& body, const SpherePoint& k, const Tolerance& tol) {
  const FarthestPoint reach = farthest_point(body, k);
  if (std::abs(reach.distance - kHalfPi) > tol.eps_opt) {
    throw GeometryError(ErrorCode::NotSupporting, "H(k) does not support the body");
  }
  const Body dual = polar(body);
  const FarthestPoint f = farthest_point(dual, k);
  return {kPi - f.distance, {k, f.point}};
}

WidthProfile width_profile(const Body& body, std::size_t n) {
  const PolarView view(body);
  WidthProfile profile;
  profile.min_width = std::numeric_limits<double>::infinity();
  for (const auto& param : equidistributed_params(view.dual_boundary, n)) {
    const SpherePoint k = view.dual_boundary[param.piece].point(param.phi);
    const double w = view.width(k).width;
    profile.samples.push_back({k, w});
    if (w < profile.min_width) {
      profile.min_width = w;
      profile.argmin_pole = k;
    }
  }
  return profile;
}

ThicknessResult thickness(const Body& body, const Tolerance& tol) {
  (void)tol;
  const PolarView view(body);
  const Boundary& poles = view.dual_boundary;
  auto objective = [&](std::size_t i, double phi) { return view.width(poles[i].point(phi)).width; };
  detail::Located best = detail::minimize_on_boundary(poles, objective, kSeedsPerPiece);

  // Brute-force cross-check; polish from its minimizer if it beats the optimizer.
  double scan = std::numeric_limits<double>::infinity();
  BoundaryParam scan_at;
  for (const auto& param : equidistributed_params(poles, kScanSamples)) {
    const double w = objective(param.piece, param.phi);
    if (w < scan) {
      scan = w;
      scan_at = param;
    }
  }
  if (scan < best.value) {
    const BoundaryArc& piece = poles[scan_at.piece];
    const double step = kTwoPi / kScanSamples;
    const double a = piece.is_full_circle() ? scan_at.phi - step : std::max(0.0, scan_at.phi - step);
    const double b = piece.is_full_circle() ? scan_at.phi + step
                                            : std::min(piece.sweep, scan_at.phi + step);
    const auto [phi, v] =
        detail::golden_min([&](double t) { return objective(scan_at.piece, t); }, a, b);
    best = v < scan ? detail::Located{v, scan_at.piece, phi}
                    : detail::Located{scan, scan_at.piece, scan_at.phi};
  }
  const WidthResult w = view.width(poles[best.piece].point(best.phi));
  return {w.width, w.pair, scan};
}

// --- diameter -------------------------------------------------------------

DiameterResult diameter(const Body& body) {
  if (const auto* cap = std::get_if<Cap>(&body)) {
    const auto [e1, e2] = tangent_frame(cap->center());
    return {2.0 * cap->radius(), polar_offset(cap->center(), e1, e2, cap->radius(), 0.0),
            polar_offset(cap->center(), e1, e2, cap->radius(), kPi)};
  }
  const Boundary boundary = boundary_of(body);
  DiameterResult best{-1.0, SpherePoint(), SpherePoint()};
  const auto vertices = body_vertices(body);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const double d = distance(vertices[i], vertices[j]);
      if (d > best.diameter) best = {d, vertices[i], vertices[j]};
    }
  }
  if (std::holds_alternative<ConvexPolygon>(body) && best.diameter <= kHalfPi) {
    // Extreme points realize the diameter when it is at most pi/2.
    return best;
  }
  auto reach = [&](std::size_t i, double phi) {
    return farthest_point(body, boundary, boundary[i].point(phi)).distance;
  };
  const detail::Located top = detail::maximize_on_boundary(boundary, reach, 64);
  if (top.value > best.diameter) {
    const SpherePoint p = boundary[top.piece].point(top.phi);
    best = {top.value, p, farthest_point(body, boundary, p).point};
  }
  return best;
}

// --- constant width / diameter --------------------------------------------

ConstantWidthCheck is_constant_width(const Body& body, double w, double tol) {
  const PolarView view(body);
  const Boundary& poles = view.dual_boundary;
  constexpr std::size_t kScan = 1024;
  ConstantWidthCheck out;
  out.max_deviation = -1.0;
  BoundaryParam worst;
  const auto params = equidistributed_params(poles, kScan);
  for (const auto& param : params) {
    const SpherePoint k = poles[param.piece].point(param.phi);
    const double dev = std::abs(view.width(k).width - w);
    if (dev > out.max_deviation) {
      out.max_deviation = dev;
      out.worst_pole = k;
      worst = param;
    }
  }
  // Refine around the worst pole.
  const BoundaryArc& piece = poles[worst.piece];
  const double step =
      2.0 * boundary_length(poles) / kScan / std::max(std::sin(piece.radius), 1e-6);
  double a = worst.phi - step, b = worst.phi + step;
  if (!piece.is_full_circle()) {
    a = std::max(a, 0.0);
    b = std::min(b, piece.sweep);
  }
  const auto [phi, neg] = detail::golden_min(
      [&](double t) { return -std::abs(view.width(piece.point(t)).width - w); }, a, b);
  if (-neg > out.max_deviation) {
    out.max_deviation = -neg;
    out.worst_pole = piece.point(phi);
  }
  out.holds = out.max_deviation <= tol;
  return out;
}

ConstantDiameterCheck is_constant_diameter(const Body& body, double w, double tol) {
  const DiameterResult d = diameter(body);
  if (std::abs(d.diameter - w) > tol) {
    throw GeometryError(ErrorCode::DiameterMismatch,
                        "diameter " + std::to_string(d.diameter) + " differs from " +
                            std::to_string(w));
  }
  const Boundary boundary = boundary_of(body);
  ConstantDiameterCheck out;
  out.max_deficit = -std::numeric_limits<double>::infinity();
  for (const auto& p : boundary_sample(body, 512)) {
    const double deficit = w - farthest_point(body, boundary, p).distance;
    if (deficit > out.max_deficit) {
      out.max_deficit = deficit;
      out.worst_point = p;
    }
  }
  out.holds = out.max_deficit <= tol;
  return out;
}

// --- reducedness certificate ------------------------------------------------

namespace {

// Thinnest lune L ⊃ P having the vertex e as the center of one bounding
// semicircle. With G = H(g) supporting P at e, the other hemisphere is
// H(sin D e - cos D g) and D = max over vertices of the angle atan2(x.g, x.e).
double lune_span(const std::vector<SpherePoint>& vertices, const SpherePoint& e,
                 const SpherePoint& g) {
  double d = 0.0;
  for (const auto& x : vertices) {
    d = std::max(d, std::atan2(dot(x, g), dot(x, e)));
  }
  return d;
}

}  // namespace

CertificateReport reducedness_certificate(const ConvexPolygon& polygon, double tol,
                                          const Tolerance& tolerance) {
  const Body body = polygon;
  CertificateReport report;
  report.thickness = thickness(body, tolerance).thickness;
  if (report.thickness >= kHalfPi) {
    throw GeometryError(ErrorCode::ThicknessTooLarge, "certificate needs thickness below pi/2");
  }
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  report.necessary = true;
  report.falsification = true;
  for (std::size_t i = 0; i < n; ++i) {
    VertexCertificate cert;
    cert.vertex = v[i];
    const SupportSet support = supporting_poles_at(body, v[i]);
    auto span_at = [&](double t) { return lune_span(v, v[i], support.at(t)); };
    double best_t = 0.0, best = std::numeric_limits<double>::infinity();
    constexpr int kSteps = 64;
    for (int j = 0; j <= kSteps; ++j) {
      const double t = static_cast<double>(j) / kSteps;
      const double s = span_at(t);
      if (s < best) {
        best = s;
        best_t = t;
      }
    }
    const auto [t, s] = detail::golden_min(span_at, std::max(0.0, best_t - 1.0 / kSteps),
                                           std::min(1.0, best_t + 1.0 / kSteps));
    if (s < best) {
      best = s;
      best_t = t;
    }
    const SpherePoint g = support.at(best_t);
    const SpherePoint h(std::sin(best) * v[i].vec() - std::cos(best) * g.vec());
    const Lune lune(g, h);
    cert.lune_thickness = lune_thickness(lune);
    cert.center_offset = distance(lune_bounding_centers(lune).first, v[i]);
    cert.necessary = std::abs(cert.lune_thickness - report.thickness) <= tol && cert.center_offset <= tol;

    // Cut the corner at depth 0.02 and require a strict thickness drop.
    constexpr double kDepth = 0.02;
    std::vector<SpherePoint> cut;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        cut.push_back(v[j]);
        continue;
      }
      const SpherePoint& prev = v[(i + n - 1) % n];
      const SpherePoint& next = v[(i + 1) % n];
      cut.push_back(move_toward(v[i], prev, kDepth));
      cut.push_back(move_toward(v[i], next, kDepth));
    }
    try {
      const double cut_thickness = thickness(Body(ConvexPolygon(std::move(cut))), tolerance).thickness;
      cert.cut_decrease = report.thickness - cut_thickness;
      cert.falsification = cert.cut_decrease >= tolerance.eps_claim;
    } catch (const GeometryError&) {
      cert.falsification = false;
    }
    report.necessary = report.necessary && cert.necessary;
    report.falsification = report.falsification && cert.falsification;
    report.vertices.push_back(cert);
  }
  if (!report.necessary) {
    report.verdict = ReducednessVerdict::NotReduced;
  } else if (report.falsification) {
    report.verdict = ReducednessVerdict::CertifiedConsistentWithReduced;
  } else {
    report.verdict = ReducednessVerdict::Inconclusive;
  }
  return report;
}

CertificateReport reducedness_certificate(const Body& body, double tol, const Tolerance& tolerance) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    return reducedness_certificate(*poly, tol, tolerance);
  }
  throw GeometryError(ErrorCode::BadParameters, "the reducedness certificate is polygon-only");
}

// --- touching ball ----------------------------------------------------------

Cap inscribed_touching_ball(const Body& body, const SpherePoint& p, double w) {
  if (!(w > kHalfPi)) {
    throw GeometryError(ErrorCode::NotConstantWidthOverHalfPi, "width must exceed pi/2");
  }
  const SupportSet support = supporting_poles_at(body, p);
  if (support.is_arc && distance(support.first, support.last) > 1e-9) {
    throw GeometryError(ErrorCode::NotConstantWidthOverHalfPi,
                        "body is not smooth at p, so not of constant width above pi/2");
  }
  const SpherePoint inner = walk(p, tangent_toward(p, support.first), w - kHalfPi);
  return Cap(inner, w - kHalfPi);
}

Cap inscribed_touching_ball(const Body& body, const SpherePoint& p, const Tolerance& tol) {
  const double w = thickness(body, tol).thickness;
  if (!(w > kHalfPi) || !is_constant_width(body, w, tol.eps_claim).holds) {
    throw GeometryError(ErrorCode::NotConstantWidthOverHalfPi,
                        "body is not of constant width above pi/2");
  }
  return inscribed_touching_ball(body, p, w);
}

}  // namespace lune
