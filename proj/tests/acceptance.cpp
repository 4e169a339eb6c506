// Acceptance criteria 1-12. One PASS/FAIL line per criterion; exit status is
// the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "lune/covering.hpp"
#include "lune/verify.hpp"
#include "lune/width.hpp"

using namespace lune;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double time_limit, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < time_limit;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s | %s | %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", id, name,
              out.detail.c_str(), secs, time_limit, in_time ? "" : " TOO SLOW");
  std::fflush(stdout);
}

SpherePoint random_point(std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  return SpherePoint(Vec3{g(gen), g(gen), g(gen)});
}

// Thickness by brute force: 2000 support poles on bd(polar) against 2000
// co-poles, width_K = pi - max distance.
double scanned_thickness(const Body& body) {
  const auto poles = boundary_sample(polar(body), 2000);
  double best = kPi;
  for (const auto& k : poles) {
    double far = 0.0;
    for (const auto& h : poles) far = std::max(far, distance(k, h));
    best = std::min(best, kPi - far);
  }
  return best;
}

}  // namespace

int main() {
  const SpherePoint north(Vec3{0, 0, 1});
  const SpherePoint tilted(Vec3{0.3, -0.5, 0.8});

  criterion(1, "lune thickness identity", 1.0, [] {
    std::mt19937_64 gen(1);
    double worst = 0.0;
    int made = 0;
    while (made < 100000) {
      const SpherePoint g = random_point(gen), h = random_point(gen);
      try {
        const Lune lune(g, h);
        const auto [a, b] = lune_bounding_centers(lune);
        worst = std::max(worst, std::abs(lune_thickness(lune) - distance(a, b)));
        ++made;
      } catch (const GeometryError&) {
      }
    }
    return Outcome{worst < 1e-9, "100000 lunes, max |thickness - center distance| = " + sci(worst)};
  });

  criterion(2, "ball width", 1.0, [&] {
    double worst = 0.0;
    for (double rho : {0.2, kPi / 6, 0.7, kPi / 4, 1.2, kHalfPi - 0.01}) {
      worst = std::max(worst, std::abs(thickness(make_cap(tilted, rho)).thickness - 2 * rho));
    }
    return Outcome{worst < 1e-7, "max |thickness - 2 rho| = " + sci(worst)};
  });

  criterion(3, "Reuleaux constancy", 10.0, [&] {
    double dev = 0.0, diam = 0.0;
    for (int n : {3, 5}) {
      for (double w : {0.6, 1.0, kHalfPi}) {
        const Body b = make_reuleaux_odd_gon(tilted, n, w);
        dev = std::max(dev, is_constant_width(b, w, 1e-6).max_deviation);
        diam = std::max(diam, std::abs(diameter(b).diameter - w));
      }
    }
    return Outcome{dev < 1e-6 && diam < 1e-6,
                   "max width deviation over 1024 poles = " + sci(dev) + ", max |diam - w| = " + sci(diam)};
  });

  criterion(4, "Dekster sharpness", 5.0, [&] {
    double worst = 0.0;
    for (double w : {0.5, 1.0, kHalfPi}) {
      const double expected = std::asin(2.0 * std::sqrt(3.0) / 3.0 * std::sin(w / 2));
      worst = std::max(worst, std::abs(min_enclosing_cap(make_reuleaux_odd_gon(tilted, 3, w)).radius - expected));
    }
    return Outcome{worst < 1e-6, "max |cap radius - arcsin(2sqrt3/3 sin(w/2))| = " + sci(worst)};
  });

  criterion(5, "quarter-disk extremals", 5.0, [&] {
    double t = 0.0, d = 0.0, c = 0.0;
    for (double delta : {0.4, 0.8, 1.2}) {
      const Body q = make_quarter_disk(tilted, delta, 0.3);
      t = std::max(t, std::abs(thickness(q).thickness - delta));
      d = std::max(d, std::abs(diameter(q).diameter - std::acos(std::cos(delta) * std::cos(delta))));
      c = std::max(c, std::abs(min_enclosing_cap(q).radius - std::atan(std::sqrt(2.0) * std::tan(delta / 2))));
    }
    return Outcome{t < 1e-6 && d < 1e-6 && c < 1e-6,
                   "thickness err " + sci(t) + ", diameter err " + sci(d) + ", cap radius err " + sci(c)};
  });

  criterion(6, "polar reciprocity (pi/2 - w)", 5.0, [&] {
    double worst = 0.0, dual_worst = 0.0;
    for (double w : {0.5, 0.9, 1.2}) {
      const double t = thickness(polar(make_reuleaux_odd_gon(tilted, 3, w))).thickness;
      worst = std::max(worst, std::abs(t - (kHalfPi - w)));
      dual_worst = std::max(dual_worst, std::abs(t - (kPi - w)));
    }
    return Outcome{worst < 1e-5, "max |polar thickness - (pi/2 - w)| = " + sci(worst) +
                                     " (against pi - w: " + sci(dual_worst) + ")"};
  });

  criterion(7, "boundary-centered cover", 20.0, [&] {
    double worst = -kPi;
    for (int n : {3, 5, 7}) {
      for (double delta : {0.3, 0.7, 1.1, 1.4}) {
        const Body b = make_regular_reduced_polygon(tilted, n, delta, 0.2);
        worst = std::max(worst, boundary_centered_cover(b).radius - delta);
      }
    }
    return Outcome{worst <= 1e-6, "max (radius - delta) = " + sci(worst)};
  });

  criterion(8, "lune center suites", 30.0, [] {
    GeneratorSpec main_spec;
    main_spec.cases = 20;
    main_spec.ngons = {3};
    Tolerance main_tol;
    main_tol.eps_claim = 1e-5;
    const SuiteReport main = run_suite("T_I_main", main_spec, 1, main_tol);
    GeneratorSpec seg_spec;
    seg_spec.cases = 20;
    const SuiteReport seg = run_suite("T_I_segment", seg_spec, 1);
    return Outcome{main.pass && seg.pass && main.cases_run == 20 && seg.cases_run == 20,
                   "T_I_main worst " + sci(main.worst_violation) + " on 20 triangles, T_I_segment worst " +
                       sci(seg.worst_violation) + " on 20 polygons"};
  });

  criterion(9, "constant width => constant diameter", 20.0, [&] {
    bool families = true;
    double deficit = 0.0;
    for (double w : {0.8, kHalfPi, 1.8}) {
      std::vector<Body> bodies = {make_reuleaux_odd_gon(tilted, 3, w), make_cap(tilted, w / 2)};
      if (w <= kHalfPi) bodies.push_back(make_reuleaux_odd_gon(tilted, 5, w));
      for (const auto& b : bodies) {
        const auto check = is_constant_diameter(b, w, 1e-5);
        families = families && check.holds;
        deficit = std::max(deficit, check.max_deficit);
      }
    }
    bool control = true;
    for (double delta : {0.4, 0.8, 1.2}) {
      const Body q = make_quarter_disk(tilted, delta);
      control = control && !is_constant_diameter(q, diameter(q).diameter, 1e-5).holds;
    }
    return Outcome{families && control, std::string("families ") + (families ? "pass" : "FAIL") +
                                            " (max deficit " + sci(deficit) + "), quarter-disk control " +
                                            (control ? "fails as expected" : "PASSES unexpectedly")};
  });

  criterion(10, "touching ball", 10.0, [&] {
    double containment = 0.0, offset = 0.0;
    const std::pair<Body, double> cases[] = {{make_reuleaux_odd_gon(tilted, 3, 1.8), 1.8},
                                             {make_cap(tilted, 0.95), 1.9}};
    for (const auto& [body, w] : cases) {
      for (const auto& p : boundary_sample(body, 64)) {
        const Cap ball = inscribed_touching_ball(body, p, w);
        offset = std::max(offset, std::abs(distance(p, ball.center()) - (w - kHalfPi)));
        for (const auto& q : boundary_sample(Body(ball), 1000)) {
          containment = std::max(containment, outside_distance(body, q));
        }
      }
    }
    return Outcome{containment <= 1e-7 && offset < 1e-12,
                   "max outside distance " + sci(containment) + ", max ||pp'| - (w - pi/2)| " + sci(offset)};
  });

  criterion(11, "thickness oracle equivalence", 60.0, [&] {
    std::mt19937_64 gen(11);
    std::vector<SpherePoint> cloud;
    for (int i = 0; i < 15; ++i) {
      const auto [e1, e2] = tangent_frame(tilted);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      cloud.push_back(polar_offset(tilted, e1, e2, 0.7 * std::sqrt(u(gen)), 2 * kPi * u(gen)));
    }
    const std::vector<Body> bodies = {
        make_cap(tilted, 0.4),
        make_cap(north, 1.1),
        make_reuleaux_odd_gon(tilted, 3, 0.9),
        make_reuleaux_odd_gon(north, 5, 1.3),
        make_reuleaux_odd_gon(tilted, 3, 1.9),
        make_quarter_disk(tilted, 0.7),
        make_quarter_disk(north, 1.3, 1.0),
        make_regular_reduced_polygon(tilted, 3, 0.8),
        make_regular_reduced_polygon(north, 7, 1.2),
        Body(convex_hull(cloud)),
    };
    double worst = 0.0;
    for (const auto& b : bodies) worst = std::max(worst, std::abs(thickness(b).thickness - scanned_thickness(b)));
    return Outcome{worst < 1e-4, "10 bodies, max |optimized - scanned| = " + sci(worst)};
  });

  criterion(12, "convex hull of two balls", 10.0, [] {
    GeneratorSpec spec;
    spec.cases = 50;
    Tolerance tol;
    tol.eps_opt = 1e-8;
    tol.eps_claim = 1e-7;
    const SuiteReport r = run_suite("T_II_convexhull", spec, 1, tol);
    return Outcome{r.pass && r.cases_run == 50,
                   "50 configurations x 200 samples, worst violation " + sci(r.worst_violation)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
