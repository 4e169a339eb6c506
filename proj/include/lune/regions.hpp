#pragma once

#include <utility>
#include <variant>

#include "lune/sphere.hpp"

namespace lune {

/// Closed hemisphere H(pole).
struct Hemisphere {
  SpherePoint pole;
};

/// Spherical ball B_radius(center), radius in (0, pi/2].
class Cap {
 public:
  Cap(const SpherePoint& center, double radius);

  const SpherePoint& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  SpherePoint center_;
  double radius_;
};

/// Intersection of the hemispheres H(g) and H(h). Only the poles are stored;
/// everything else is derived.
class Lune {
 public:
  Lune(const SpherePoint& g, const SpherePoint& h, double eps_alg = Tolerance{}.eps_alg);

  const SpherePoint& g() const { return g_; }
  const SpherePoint& h() const { return h_; }

 private:
  SpherePoint g_;
  SpherePoint h_;
};

/// pi - |gh|.
double lune_thickness(const Lune& lune);

/// Centers of the bounding semicircles G/H and H/G.
std::pair<SpherePoint, SpherePoint> lune_bounding_centers(const Lune& lune);

/// The two (antipodal) corners, +-normalize(g x h).
std::pair<SpherePoint, SpherePoint> lune_corners(const Lune& lune);

using Region = std::variant<Hemisphere, Cap, Lune>;

bool region_contains(const Region& region, const SpherePoint& p,
                     double eps_alg = Tolerance{}.eps_alg);

}  // namespace lune
