#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lune/bodies.hpp"

namespace lune {

/// Poles of two supporting hemispheres K = H(k), K* = H(k_star) forming the
/// narrowest lune K ∩ K* for the given K.
struct CoSupportPair {
  SpherePoint k;
  SpherePoint k_star;
};

struct WidthResult {
  double width = 0.0;
  CoSupportPair pair;
};

struct WidthProfile {
  struct Sample {
    SpherePoint pole;
    double width;
  };
  std::vector<Sample> samples;
  double min_width = 0.0;
  SpherePoint argmin_pole;
};

struct ThicknessResult {
  double thickness = 0.0;
  CoSupportPair pair;
  double scan_thickness = 0.0;  // 2000-sample brute-force value
};

struct DiameterResult {
  double diameter = 0.0;
  SpherePoint a;
  SpherePoint b;
};

struct ConstantWidthCheck {
  bool holds = false;
  double max_deviation = 0.0;
  SpherePoint worst_pole;
};

struct ConstantDiameterCheck {
  bool holds = false;
  double max_deficit = 0.0;  // max over samples of w - (farthest distance)
  SpherePoint worst_point;
};

enum class ReducednessVerdict { CertifiedConsistentWithReduced, NotReduced, Inconclusive };

struct VertexCertificate {
  SpherePoint vertex;
  double lune_thickness = 0.0;  // thinnest lune centered at the vertex
  double center_offset = 0.0;   // |vertex - bounding center|
  bool necessary = false;
  double cut_decrease = 0.0;    // thickness lost by cutting the corner
  bool falsification = false;
};

struct CertificateReport {
  double thickness = 0.0;
  std::vector<VertexCertificate> vertices;
  bool necessary = false;
  bool falsification = false;
  ReducednessVerdict verdict = ReducednessVerdict::Inconclusive;
};

/// Polar set: the intersection of H(p) over all points p of the body.
Body polar(const Body& body);

/// Intersection of the caps B_rho(p) over the points.
Body polar_rho(std::span<const SpherePoint> points, double rho);

/// Intersection of B_rho(p) over the body (vertex caps for polygons, refined
/// boundary-sample caps for disk-polygons).
Body polar_rho(const Body& body, double rho, const Tolerance& tol = {});

/// Width of the body determined by the supporting hemisphere H(k).
WidthResult width_at(const Body& body, const SpherePoint& k, const Tolerance& tol = {});

/// Width determined by every pole of a deterministic n-pole scan of bd(polar(B)).
WidthProfile width_profile(const Body& body, std::size_t n);

/// Smallest width over all supporting hemispheres.
ThicknessResult thickness(const Body& body, const Tolerance& tol = {});

DiameterResult diameter(const Body& body);

ConstantWidthCheck is_constant_width(const Body& body, double w, double tol);

/// Throws DiameterMismatch when diameter(body) is not w within tol.
ConstantDiameterCheck is_constant_diameter(const Body& body, double w, double tol);

/// Numeric reducedness certificate for polygons of thickness below pi/2.
CertificateReport reducedness_certificate(const ConvexPolygon& polygon, double tol,
                                          const Tolerance& tolerance = {});
/// Polygon-only; throws BadParameters for caps and disk-polygons.
CertificateReport reducedness_certificate(const Body& body, double tol,
                                          const Tolerance& tolerance = {});

/// Ball B_{w - pi/2}(p') touching a body of constant width w > pi/2 from
/// inside at the boundary point p.
Cap inscribed_touching_ball(const Body& body, const SpherePoint& p, double w);
/// Same, measuring w and checking constant width first.
Cap inscribed_touching_ball(const Body& body, const SpherePoint& p, const Tolerance& tol = {});

}  // namespace lune
