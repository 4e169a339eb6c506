#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lune/boundary.hpp"

namespace lune::detail {

struct Located {
  double value;
  std::size_t piece;
  double phi;
};

/// Golden-section minimization of f on [a, b].
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol = 1e-13,
                                     int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

/// Minimizes f(piece, phi) over a boundary: `samples` evenly spaced seeds per
/// piece (endpoints included), then golden-section refinement around every
/// sampled local minimum.
template <typename F>
Located minimize_on_boundary(const Boundary& boundary, F&& f, int samples) {
  Located best{std::numeric_limits<double>::infinity(), 0, 0.0};
  samples = std::max(samples, 3);
  std::vector<double> phis, vals;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const BoundaryArc& piece = boundary[i];
    const bool periodic = piece.is_full_circle();
    const int count = samples;
    phis.assign(count, 0.0);
    vals.assign(count, 0.0);
    for (int j = 0; j < count; ++j) {
      phis[j] = periodic ? piece.sweep * j / count : piece.sweep * j / (count - 1);
      vals[j] = f(i, phis[j]);
      if (vals[j] < best.value) best = {vals[j], i, phis[j]};
    }
    const double step = periodic ? piece.sweep / count : piece.sweep / (count - 1);
    for (int j = 0; j < count; ++j) {
      const int l = j - 1, r = j + 1;
      const bool left_ok = l >= 0 ? vals[j] <= vals[l] : (periodic ? vals[j] <= vals[count - 1] : true);
      const bool right_ok =
          r < count ? vals[j] <= vals[r] : (periodic ? vals[j] <= vals[0] : true);
      if (!left_ok || !right_ok) continue;
      double a = phis[j] - step, b = phis[j] + step;
      if (!periodic) {
        a = std::max(a, 0.0);
        b = std::min(b, piece.sweep);
      }
      auto [phi, v] = golden_min([&](double t) { return f(i, t); }, a, b);
      if (v < best.value) {
        if (periodic) {
          phi = std::fmod(phi, piece.sweep);
          if (phi < 0) phi += piece.sweep;
        }
        best = {v, i, phi};
      }
    }
  }
  return best;
}

template <typename F>
Located maximize_on_boundary(const Boundary& boundary, F&& f, int samples) {
  Located r = minimize_on_boundary(
      boundary, [&](std::size_t i, double phi) { return -f(i, phi); }, samples);
  r.value = -r.value;
  return r;
}

}  // namespace lune::detail
