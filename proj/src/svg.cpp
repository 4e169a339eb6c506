#include "lune/svg.hpp"

#include <cstdio>
#include <sstream>

#include "lune/covering.hpp"

namespace lune {

namespace {

constexpr double kMid = 500.0;
constexpr double kFit = 450.0;

class View {
 public:
  View(const SpherePoint& center, Projection projection, double extent_angle)
      : center_(center), projection_(projection) {
    const auto frame = tangent_frame(center);
    e1_ = frame[0];
    e2_ = frame[1];
    double extent = 1.0;
    if (projection == Projection::Gnomonic) {
      if (extent_angle >= kHalfPi - 1e-9) {
        throw GeometryError(ErrorCode::BadParameters,
                            "gnomonic projection needs the body within an open hemisphere of the view center");
      }
      extent = std::tan(extent_angle);
    } else if (extent_angle < kHalfPi) {
      extent = std::sin(extent_angle);
    }
    scale_ = kFit / std::max(extent, 1e-9);
  }

  // Screen coordinates, or nothing for points hidden by the projection.
  std::optional<std::pair<double, double>> operator()(const SpherePoint& p) const {
    const double h = dot(p.vec(), center_.vec());
    double x = dot(p.vec(), e1_), y = dot(p.vec(), e2_);
    if (projection_ == Projection::Gnomonic) {
      if (h <= 1e-6) return std::nullopt;
      x /= h;
      y /= h;
    } else if (h < -1e-12) {
      return std::nullopt;
    }
    return std::pair{kMid + scale_ * x, kMid - scale_ * y};
  }

  // Screen radius of a cap centered at the view center.
  double radius(double angle) const {
    return scale_ * (projection_ == Projection::Gnomonic ? std::tan(angle) : std::sin(angle));
  }

 private:
  SpherePoint center_;
  Projection projection_;
  Vec3 e1_, e2_;
  double scale_ = 1.0;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// Polyline through the visible runs of the points.
std::string path_data(const View& view, const std::vector<SpherePoint>& points, bool closed) {
  std::string d;
  bool pen_down = false;
  for (const auto& p : points) {
    const auto q = view(p);
    if (!q) {
      pen_down = false;
      continue;
    }
    d += (pen_down ? " L " : (d.empty() ? "M " : " M ")) + fmt(q->first) + " " + fmt(q->second);
    pen_down = true;
  }
  if (closed && !d.empty()) d += " Z";
  return d;
}

std::vector<SpherePoint> trace(const BoundaryArc& piece, int steps) {
  std::vector<SpherePoint> pts;
  for (int i = 0; i <= steps; ++i) pts.push_back(piece.point(piece.sweep * i / steps));
  return pts;
}

}  // namespace

std::string plot_svg(const Body& body, const PlotOptions& options) {
  const SpherePoint center = centroid_direction(body);
  const CoverResult cover = min_enclosing_cap(body);
  const View view(center, options.projection, distance(center, cover.center) + cover.radius);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  for (const auto& piece : boundary_of(body)) {
    std::string d;
    if (piece.is_geodesic() && options.projection == Projection::Gnomonic) {
      // Great circles project to straight lines.
      d = path_data(view, {piece.start(), piece.end()}, false);
    } else {
      d = path_data(view, trace(piece, 96), piece.is_full_circle());
    }
    out << "<path class=\"edge " << (piece.is_geodesic() ? "geodesic" : "arc") << "\" d=\"" << d
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }

  if (options.with_cap) {
    if (distance(cover.center, center) < 1e-9) {
      out << "<circle class=\"cap\" cx=\"" << fmt(kMid) << "\" cy=\"" << fmt(kMid) << "\" r=\""
          << fmt(view.radius(cover.radius)) << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    } else {
      out << "<path class=\"cap\" d=\""
          << path_data(view, trace(BoundaryArc::full_circle(cover.center, cover.radius), 192), true)
          << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    }
  }

  if (options.lune) {
    const Lune lune(options.lune->k, options.lune->k_star);
    const auto [a, b] = lune_bounding_centers(lune);
    const SpherePoint corner = lune_corners(lune).first;
    for (const auto& mid : {a, b}) {
      std::vector<SpherePoint> half;
      for (int i = 0; i <= 192; ++i) {
        const double t = kPi * i / 192;
        half.emplace_back(std::cos(t) * corner.vec() + std::sin(t) * mid.vec());
      }
      out << "<path class=\"lune\" d=\"" << path_data(view, half, false)
          << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& mid : {a, b}) {
      if (const auto q = view(mid)) {
        out << "<circle class=\"lune-center\" cx=\"" << fmt(q->first) << "\" cy=\"" << fmt(q->second)
            << "\" r=\"6\" fill=\"#d62728\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lune
