#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lune/bodies.hpp"

namespace lune {

struct CoverResult {
  SpherePoint center;
  double radius = 0.0;
  std::vector<SpherePoint> support;  // at most 3 determining points
};

/// Smallest cap containing a finite point set, by enumeration of diametral
/// pairs and circumscribed triples.
CoverResult min_enclosing_cap(std::span<const SpherePoint> points);

/// Smallest cap containing the body.
CoverResult min_enclosing_cap(const Body& body, const Tolerance& tol = {});

struct BoundaryCover {
  SpherePoint center;  // on the body boundary
  double radius = 0.0;
};

/// Boundary point minimizing the distance to the farthest point of the body.
BoundaryCover boundary_centered_cover(const Body& body);

/// Covering-radius bounds as functions of the thickness.
double dekster_cover_radius(double width);          // constant width <= 2pi/3
double wide_constant_width_cover_radius(double width);  // constant width >= pi/2
double reduced_cover_radius(double thickness);      // reduced, thickness <= pi/2

enum class Regime { ConstantWidth, Reduced };

struct CoverBound {
  std::string name;
  double value = 0.0;
  double slack = 0.0;  // bound - measured
  bool holds = false;
};

struct BoundReport {
  double thickness = 0.0;
  double measured_radius = 0.0;
  bool constant_width = false;
  bool reduced = false;
  std::vector<CoverBound> bounds;
  bool holds = false;
};

/// Measures the smallest covering cap and compares it with every bound that
/// applies to the detected (or assumed) regime. Throws RegimeUnknown when the
/// body is neither of constant width nor certified/assumed reduced.
BoundReport covering_bound_report(const Body& body, std::optional<Regime> assumed = std::nullopt,
                                  const Tolerance& tol = {});

}  // namespace lune
