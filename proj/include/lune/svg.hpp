#pragma once

#include <optional>
#include <string>

#include "lune/bodies.hpp"
#include "lune/width.hpp"

namespace lune {

enum class Projection { Orthographic, Gnomonic };

struct PlotOptions {
  Projection projection = Projection::Orthographic;
  std::optional<CoSupportPair> lune;  // overlay the lune H(k) ∩ H(k_star)
  bool with_cap = false;              // overlay the smallest enclosing cap
};

/// SVG 1.1 figure of the body, projected about its centroid direction onto a
/// 1000x1000 view box; the enclosing cap fits in radius 450 around the middle.
/// Every boundary piece is its own <path> (class "edge geodesic" or
/// "edge arc"). Throws BadParameters when the gnomonic view cannot hold the body.
std::string plot_svg(const Body& body, const PlotOptions& options = {});

}  // namespace lune
