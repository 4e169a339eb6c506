#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lune/covering.hpp"
#include "lune/width.hpp"

using namespace lune;

namespace {

const SpherePoint kTilted(Vec3{0.3, -0.5, 0.8});

SpherePoint random_near(std::mt19937_64& gen, const SpherePoint& c, double spread) {
  const auto [e1, e2] = tangent_frame(c);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return polar_offset(c, e1, e2, spread * std::sqrt(u(gen)), 2 * kPi * u(gen));
}

double reach(const SpherePoint& c, std::span<const SpherePoint> pts) {
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, distance(c, p));
  return r;
}

// Upper-bound oracle: pattern search on the center with a shrinking step.
double pattern_search_radius(std::span<const SpherePoint> pts) {
  SpherePoint c = pts[0];
  double best = reach(c, pts);
  for (double step = 0.5; step > 1e-6; step *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      const auto [e1, e2] = tangent_frame(c);
      for (int k = 0; k < 16; ++k) {
        const SpherePoint q = polar_offset(c, e1, e2, step, 2 * kPi * k / 16);
        const double r = reach(q, pts);
        if (r < best - 1e-15) {
          best = r;
          c = q;
          moved = true;
          break;
        }
      }
    }
  }
  return best;
}

// Optimality oracle: the center lies in the hull of the farthest points, i.e.
// their tangent directions leave no angular gap wider than pi.
double largest_gap(const SpherePoint& c, std::span<const SpherePoint> pts, double radius) {
  const auto [e1, e2] = tangent_frame(c);
  std::vector<double> angles;
  for (const auto& p : pts) {
    if (distance(c, p) > radius - 1e-9) angles.push_back(std::atan2(dot(p.vec(), e2), dot(p.vec(), e1)));
  }
  if (angles.empty()) return 2 * kPi;
  std::sort(angles.begin(), angles.end());
  double gap = angles.front() + 2 * kPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GeometryError thrown";
  return ErrorCode::Schema;
}

}  // namespace

TEST(MinCapPoints, MatchesPatternSearchOracle) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SpherePoint> pts;
    for (int i = 0; i < 3 + trial % 20; ++i) pts.push_back(random_near(gen, kTilted, 1.2));
    const CoverResult cap = min_enclosing_cap(pts);
    EXPECT_NEAR(reach(cap.center, pts), cap.radius, 1e-12);
    EXPECT_LE(cap.radius, pattern_search_radius(pts) + 1e-12);
    EXPECT_LE(largest_gap(cap.center, pts, cap.radius), kPi + 1e-9);
    EXPECT_LE(cap.support.size(), 3u);
    for (const auto& s : cap.support) EXPECT_NEAR(distance(cap.center, s), cap.radius, 1e-9);
  }
}

TEST(MinCapPoints, HellyTriplesDetermineTheRadius) {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SpherePoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(random_near(gen, kTilted, 1.0));
    double triple_max = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          const SpherePoint t[] = {pts[i], pts[j], pts[k]};
          triple_max = std::max(triple_max, min_enclosing_cap(std::span<const SpherePoint>(t)).radius);
        }
      }
    }
    EXPECT_NEAR(min_enclosing_cap(pts).radius, triple_max, 1e-12);
  }
}

TEST(MinCapPoints, DegenerateInputs) {
  const SpherePoint one[] = {kTilted};
  EXPECT_EQ(min_enclosing_cap(std::span<const SpherePoint>(one)).radius, 0.0);
  const SpherePoint opposite[] = {kTilted, antipode(kTilted)};
  EXPECT_EQ(code_of([&] { min_enclosing_cap(std::span<const SpherePoint>(opposite)); }),
            ErrorCode::NotInOpenHemisphere);
}

TEST(MinCapBody, CapCoversItself) {
  const CoverResult r = min_enclosing_cap(make_cap(kTilted, 0.7));
  EXPECT_NEAR(r.radius, 0.7, 1e-15);
  EXPECT_NEAR(distance(r.center, kTilted), 0.0, 1e-15);
}

TEST(MinCapBody, ReuleauxTriangleMatchesClosedForm) {
  for (double w : {0.3, 0.8, 1.2, kHalfPi}) {
    EXPECT_NEAR(min_enclosing_cap(make_reuleaux_odd_gon(kTilted, 3, w)).radius, dekster_cover_radius(w), 1e-7) << w;
  }
  // Past a quarter turn the wide bound is the attained one.
  for (double w : {1.7, 1.9, 2.0}) {
    const double r = min_enclosing_cap(make_reuleaux_odd_gon(kTilted, 3, w)).radius;
    EXPECT_NEAR(r, wide_constant_width_cover_radius(w), 1e-7) << w;
    EXPECT_LT(r, dekster_cover_radius(w));
  }
}

TEST(MinCapBody, QuarterDisk) {
  for (double delta : {0.3, 0.9, 1.4}) {
    EXPECT_NEAR(min_enclosing_cap(make_quarter_disk(kTilted, delta, 1.0)).radius,
                std::atan(std::sqrt(2.0) * std::tan(delta / 2)), 1e-7);
  }
}

TEST(MinCapBody, MinimalAndCenterIsUnique) {
  std::mt19937_64 gen(23);
  const std::vector<Body> bodies = {make_quarter_disk(kTilted, 0.9), make_reuleaux_odd_gon(kTilted, 5, 1.1),
                                    make_regular_reduced_polygon(kTilted, 3, 1.0)};
  for (const auto& body : bodies) {
    const CoverResult r = min_enclosing_cap(body);
    const auto samples = boundary_sample(body, 2000);
    EXPECT_LE(reach(r.center, samples), r.radius + 1e-9);
    // Every displaced center needs a strictly larger radius.
    for (int k = 0; k < 8; ++k) {
      const SpherePoint moved = random_near(gen, r.center, 1e-3);
      if (distance(moved, r.center) < 1e-4) continue;
      EXPECT_GT(farthest_point(body, moved).distance, r.radius + 1e-9);
    }
    // Shrinking leaves something uncovered.
    EXPECT_GT(reach(r.center, samples), r.radius - 1e-4);
  }
}

TEST(BoundaryCover, AtLeastTheMinimalCapAndTwiceTheRadiusForCaps) {
  EXPECT_NEAR(boundary_centered_cover(make_cap(kTilted, 0.4)).radius, 0.8, 1e-9);
  for (const auto& body : {make_quarter_disk(kTilted, 0.8), make_reuleaux_odd_gon(kTilted, 3, 1.0),
                           make_regular_reduced_polygon(kTilted, 5, 0.9)}) {
    const BoundaryCover c = boundary_centered_cover(body);
    EXPECT_LT(boundary_distance(body, c.center), 1e-9);
    EXPECT_GE(c.radius, min_enclosing_cap(body).radius - 1e-12);
    EXPECT_NEAR(farthest_point(body, c.center).distance, c.radius, 1e-12);
  }
}

TEST(BoundaryCover, ReducedPolygonsStayWithinTheirThickness) {
  for (int n : {3, 5, 7}) {
    for (double delta : {0.4, 1.0, 1.5}) {
      EXPECT_LE(boundary_centered_cover(make_regular_reduced_polygon(kTilted, n, delta)).radius, delta + 1e-6);
    }
  }
}

TEST(Bounds, ClosedFormValues) {
  EXPECT_NEAR(dekster_cover_radius(kHalfPi), std::asin(std::sqrt(6.0) / 3.0), 1e-15);
  // The two constant-width bounds coincide at w = pi/2.
  EXPECT_NEAR(wide_constant_width_cover_radius(kHalfPi), dekster_cover_radius(kHalfPi), 1e-15);
  EXPECT_NEAR(reduced_cover_radius(kHalfPi), std::atan(std::sqrt(2.0)), 1e-15);
}

TEST(BoundReport, ReuleauxTriangleIsTight) {
  const BoundReport r = covering_bound_report(make_reuleaux_odd_gon(kTilted, 3, 1.0));
  EXPECT_TRUE(r.constant_width);
  EXPECT_TRUE(r.reduced);
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.bounds.size(), 2u);
  EXPECT_EQ(r.bounds[0].name, "dekster");
  EXPECT_NEAR(r.bounds[0].slack, 0.0, 1e-7);
  EXPECT_EQ(r.bounds[1].name, "reduced");
  EXPECT_GT(r.bounds[1].slack, 0.0);
}

TEST(BoundReport, WideReuleauxUsesBothConstantWidthBounds) {
  const BoundReport r = covering_bound_report(make_reuleaux_odd_gon(kTilted, 3, 1.8));
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.bounds.size(), 2u);
  for (const auto& b : r.bounds) EXPECT_GE(b.slack, -1e-7) << b.name;
}

TEST(BoundReport, CertifiedReducedPolygon) {
  const BoundReport r = covering_bound_report(make_regular_reduced_polygon(kTilted, 5, 0.7));
  EXPECT_TRUE(r.reduced);
  EXPECT_FALSE(r.constant_width);
  ASSERT_EQ(r.bounds.size(), 1u);
  EXPECT_EQ(r.bounds[0].name, "reduced");
  EXPECT_TRUE(r.holds);
}

TEST(BoundReport, UnknownRegimeIsReported) {
  std::mt19937_64 gen(24);
  std::vector<SpherePoint> pts;
  for (int i = 0; i < 12; ++i) pts.push_back(random_near(gen, kTilted, 0.6));
  const Body hull(convex_hull(pts));
  EXPECT_EQ(code_of([&] { covering_bound_report(hull); }), ErrorCode::RegimeUnknown);
  EXPECT_EQ(code_of([] { covering_bound_report(make_quarter_disk(kTilted, 0.8)); }), ErrorCode::RegimeUnknown);
  // The quarter disk is reduced; with that hint the reduced bound is attained.
  const BoundReport q = covering_bound_report(make_quarter_disk(kTilted, 0.8), Regime::Reduced);
  EXPECT_TRUE(q.holds);
  EXPECT_NEAR(q.bounds.at(0).slack, 0.0, 1e-7);
}
