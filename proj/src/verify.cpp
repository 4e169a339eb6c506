#include "lune/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "json.hpp"

#include "lune/covering.hpp"
#include "lune/width.hpp"
#include "optimize.hpp"

namespace lune {

namespace {

// Each assertion reduces to a residual r with the claim r <= eps_claim.
// Inverted, the claim becomes r >= eps_claim, scored as 2 eps_claim - r.
class Checker {
 public:
  Checker(double eps, bool invert) : eps_(eps), invert_(invert) {}

  void residual(double r) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    worst_ = std::max(worst_, invert_ ? 2.0 * eps_ - r : r);
  }
  void require(bool ok) { residual(ok ? 0.0 : 1.0); }
  // Errors fail the suite whatever the direction of the assertions.
  void error(std::string what) {
    errors_.push_back(std::move(what));
    worst_ = std::max(worst_, 1.0);
  }

  double worst() const { return std::max(worst_, 0.0); }
  std::vector<std::string> take_errors() { return std::move(errors_); }

 private:
  double eps_;
  bool invert_;
  double worst_ = -std::numeric_limits<double>::infinity();
  std::vector<std::string> errors_;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }

  SpherePoint point() {
    std::normal_distribution<double> g;
    for (;;) {
      const Vec3 v{g(gen_), g(gen_), g(gen_)};
      if (v.norm() > 1e-6) return SpherePoint(v);
    }
  }

 private:
  std::mt19937_64 gen_;
};

struct Context {
  const GeneratorSpec& spec;
  Rng rng;
  Checker check;
  Tolerance tol;
  std::size_t cases = 0;

  std::size_t count(std::size_t fallback) const { return spec.cases ? spec.cases : fallback; }
  std::size_t samples(std::size_t base) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(base * spec.density)));
  }
  std::vector<int> ngons(std::vector<int> fallback) const {
    return spec.ngons.empty() ? fallback : spec.ngons;
  }
  // Parameter for case j: explicit values cycle, otherwise uniform in the range.
  double param(std::size_t j, double lo, double hi) {
    if (!spec.values.empty()) return spec.values[j % spec.values.size()];
    if (spec.lo < spec.hi) return rng.uniform(spec.lo, spec.hi);
    return rng.uniform(lo, hi);
  }
  int pick(const std::vector<int>& options) { return options[rng.index(options.size())]; }

  template <typename F>
  void run_case(F&& body) {
    ++cases;
    try {
      body();
    } catch (const GeometryError& e) {
      check.error(e.what());
    }
  }
};

// Largest Reuleaux width for an n-gon in this toolkit.
double max_reuleaux_width(int n) { return n == 3 ? 2.0 * kPi / 3.0 : kHalfPi; }

double segment_distance(const SpherePoint& a, const SpherePoint& b, const SpherePoint& p) {
  return BoundaryArc::geodesic(a, b).nearest_to(p).distance;
}

// --- Theorem-level suites -------------------------------------------------

// Adjacent minimal-width configurations of reduced polygons: the bounding
// semicircle centers lie on the boundary and |a1 a2| = |b1 b2|.
void suite_main(Context& ctx) {
  const auto ngons = ctx.ngons({3, 5});
  const std::size_t scan = ctx.samples(16);
  for (std::size_t j = 0; j < ctx.count(10); ++j) {
    const int n = ctx.pick(ngons);
    const double delta = ctx.param(j, 0.3, 1.4);
    const SpherePoint center = ctx.rng.point();
    const double phase = ctx.rng.uniform(0.0, 2.0 * kPi);
    ctx.run_case([&] {
      const Body body = make_regular_reduced_polygon(center, n, delta, phase);
      const auto& v = std::get<ConvexPolygon>(body).vertices();
      const double thick = thickness(body, ctx.tol).thickness;

      // Minimal-width poles in polar boundary order: the edge pole of edge i,
      // then the best pole in the support arc of vertex i+1.
      std::vector<WidthResult> minimal;
      for (int i = 0; i < n; ++i) {
        const SpherePoint edge_pole(cross(v[i].vec(), v[(i + 1) % n].vec()));
        const WidthResult at_edge = width_at(body, edge_pole, ctx.tol);
        if (at_edge.width <= thick + ctx.tol.eps_opt) minimal.push_back(at_edge);

        const SupportSet support = supporting_poles_at(body, v[(i + 1) % n]);
        auto width_along = [&](double t) { return width_at(body, support.at(t), ctx.tol).width; };
        double best_t = 0.5, best = width_along(0.5);
        for (std::size_t s = 1; s < scan; ++s) {
          const double t = static_cast<double>(s) / scan;
          const double w = width_along(t);
          if (w < best) best = w, best_t = t;
        }
        const double step = 1.0 / scan;
        const auto [t, w] = detail::golden_min(width_along, std::max(step, best_t - step),
                                               std::min(1.0 - step, best_t + step));
        if (w <= thick + ctx.tol.eps_opt) minimal.push_back(width_at(body, support.at(t), ctx.tol));
      }
      ctx.check.require(minimal.size() >= 2);
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        const auto& m1 = minimal[i];
        const auto& m2 = minimal[(i + 1) % minimal.size()];
        const auto [a1, b1] = lune_bounding_centers(Lune(m1.pair.k, m1.pair.k_star));
        const auto [a2, b2] = lune_bounding_centers(Lune(m2.pair.k, m2.pair.k_star));
        for (const auto& p : {a1, b1, a2, b2}) ctx.check.residual(boundary_distance(body, p));
        ctx.check.residual(std::abs(distance(a1, a2) - distance(b1, b2)));
      }
    });
  }
}

// Every edge of a reduced polygon carries a minimal-width lune whose center
// on the edge's great circle lies in the edge.
void suite_segment(Context& ctx) {
  const auto ngons = ctx.ngons({3, 5, 7});
  for (std::size_t j = 0; j < ctx.count(20); ++j) {
    const int n = ctx.pick(ngons);
    const double delta = ctx.param(j, 0.2, 1.45);
    const SpherePoint center = ctx.rng.point();
    const double phase = ctx.rng.uniform(0.0, 2.0 * kPi);
    ctx.run_case([&] {
      const Body body = make_regular_reduced_polygon(center, n, delta, phase);
      const auto& v = std::get<ConvexPolygon>(body).vertices();
      for (int i = 0; i < n; ++i) {
        const SpherePoint& x1 = v[i];
        const SpherePoint& x2 = v[(i + 1) % n];
        const WidthResult w = width_at(body, SpherePoint(cross(x1.vec(), x2.vec())), ctx.tol);
        const SpherePoint c = lune_bounding_centers(Lune(w.pair.k, w.pair.k_star)).first;
        ctx.check.residual(std::abs(w.width - delta));
        ctx.check.residual(segment_distance(x1, x2, c));
      }
    });
  }
}

// Caps of radius >= pi/4 are of constant width; bodies of thickness above
// pi/2 have a unique supporting hemisphere at every boundary point.
void suite_constant(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(12); ++j) {
    const bool reuleaux = j % 3 == 2;
    const double rho = ctx.param(j, kPi / 4.0, kHalfPi - 0.01);
    const double w_reuleaux = ctx.rng.uniform(kHalfPi + 0.02, 2.0 * kPi / 3.0 - 0.01);
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      const Body body = reuleaux ? make_reuleaux_odd_gon(center, 3, w_reuleaux) : make_cap(center, rho);
      const double w = reuleaux ? w_reuleaux : 2.0 * rho;
      ctx.check.residual(is_constant_width(body, w, ctx.tol.eps_claim).max_deviation);
      ctx.check.residual(std::abs(thickness(body, ctx.tol).thickness - w));
      for (const auto& p : boundary_sample(body, ctx.samples(48))) {
        ctx.check.require(!supporting_poles_at(body, p).is_arc);
      }
    });
  }
}

// Constant width holds exactly for the strictly convex families.
void suite_strict(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(12); ++j) {
    const bool polygon = j % 2 == 0;
    const int n = polygon ? ctx.pick(ctx.ngons({3, 5, 7})) : ctx.pick({3, 5});
    const double x = ctx.param(j, 0.3, polygon ? 1.45 : kHalfPi);
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      if (polygon) {
        const Body body = make_regular_reduced_polygon(center, n, x);
        ctx.check.require(!is_constant_width(body, x, ctx.tol.eps_claim).holds);
      } else {
        const Body body = make_reuleaux_odd_gon(center, n, x);
        const auto cw = is_constant_width(body, x, ctx.tol.eps_claim);
        ctx.check.require(cw.holds);
        ctx.check.residual(cw.max_deviation);
      }
    });
  }
}

// At every boundary point p of a body of constant width there is a lune of
// the same thickness containing it with p as a semicircle center.
void suite_lune_at_p(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(9); ++j) {
    const int kind = static_cast<int>(j % 3);  // reuleaux 3, reuleaux 5, cap
    const int n = kind == 1 ? 5 : 3;
    const double w = kind == 2 ? ctx.param(j, 0.2, kPi - 0.2) : ctx.param(j, 0.3, max_reuleaux_width(n));
    const SpherePoint center = ctx.rng.point();
    const double t = ctx.rng.uniform(0.0, 1.0);
    ctx.run_case([&] {
      const Body body = kind == 2 ? make_cap(center, w / 2.0) : make_reuleaux_odd_gon(center, n, w);
      for (const auto& p : boundary_sample(body, ctx.samples(32))) {
        // The lune H(k) ∩ H(h) with k supporting at p, thickness w and p the
        // center of the semicircle on bd H(k) is unique; it must contain W.
        const SpherePoint k = supporting_poles_at(body, p).at(t);
        const SpherePoint h(-std::cos(w) * k.vec() + std::sin(w) * p.vec());
        const Lune lune(k, h);
        ctx.check.residual(std::abs(lune_thickness(lune) - w));
        ctx.check.residual(distance(lune_bounding_centers(lune).first, p));
        ctx.check.residual(farthest_point(body, k).distance - kHalfPi);
        ctx.check.residual(farthest_point(body, h).distance - kHalfPi);
        // It is also a narrowest lune for H(k).
        ctx.check.residual(std::abs(width_at(body, k, ctx.tol).width - w));
      }
    });
  }
}

// B_mu(x) lies in conv(B_mu(x1) u B_mu(x2)) for x on the arc x1 x2. The hull
// is tested through its polar: y is in the hull iff every pole within
// pi/2 - mu of both x1 and x2 is within pi/2 of y.
void suite_convexhull(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(50); ++j) {
    const double mu = ctx.param(j, 0.05, 1.2);
    const double d = ctx.rng.uniform(0.05, kPi - 2.0 * mu - 0.05);
    const double t = ctx.rng.uniform(0.0, 1.0);
    const SpherePoint x1 = ctx.rng.point();
    const SpherePoint toward = ctx.rng.point();
    ctx.run_case([&] {
      const SpherePoint x2 = move_toward(x1, toward, d);
      const SpherePoint x = interpolate(x1, x2, t);
      const SpherePoint pts[] = {x1, x2};
      const Body poles = polar_rho(std::span<const SpherePoint>(pts), kHalfPi - mu);
      const Boundary pole_boundary = boundary_of(poles);
      for (const auto& y : boundary_sample(make_cap(x, mu), ctx.samples(200))) {
        ctx.check.residual(farthest_point(poles, pole_boundary, y).distance - kHalfPi);
      }
    });
  }
}

// Balls of radius w - pi/2 touching a body of constant width w > pi/2 from
// inside at any boundary point.
void suite_touching(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(4); ++j) {
    const bool reuleaux = j % 2 == 0;
    const double w = reuleaux ? ctx.param(j, kHalfPi + 0.05, 2.0 * kPi / 3.0 - 0.01)
                              : ctx.param(j, kHalfPi + 0.05, kPi - 0.04);
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      const Body body = reuleaux ? make_reuleaux_odd_gon(center, 3, w) : make_cap(center, w / 2.0);
      const double mu = w - kHalfPi;
      for (const auto& p : boundary_sample(body, ctx.samples(64))) {
        const Cap ball = inscribed_touching_ball(body, p, w);
        ctx.check.residual(std::abs(ball.radius() - mu));
        ctx.check.residual(std::abs(distance(ball.center(), p) - mu));
        for (const auto& q : boundary_sample(Body(ball), ctx.samples(1000))) {
          ctx.check.residual(outside_distance(body, q));
        }
      }
    });
  }
}

// Constant width w implies diameter w.
void suite_diam_w(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(15); ++j) {
    const int kind = static_cast<int>(j % 3);
    const int n = kind == 1 ? 5 : 3;
    const double w = kind == 2 ? ctx.param(j, 0.2, kPi - 0.05) : ctx.param(j, 0.3, max_reuleaux_width(n));
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      const Body body = kind == 2 ? make_cap(center, w / 2.0) : make_reuleaux_odd_gon(center, n, w);
      ctx.check.residual(std::abs(diameter(body).diameter - w));
    });
  }
}

// Constant width w implies constant diameter w; the converse for w >= pi/2.
void suite_iff(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(15); ++j) {
    const int kind = static_cast<int>(j % 5);  // reuleaux 3, reuleaux 5, cap, quarter disk, reduced
    const int n = kind == 1 || kind == 4 ? 5 : 3;
    double x = 0.0;
    switch (kind) {
      case 0: x = ctx.param(j, 0.3, 2.0 * kPi / 3.0); break;
      case 1: x = ctx.param(j, 0.3, kHalfPi); break;
      case 2: x = ctx.param(j, 0.2, kPi - 0.05); break;
      default: x = ctx.param(j, 0.3, 1.45); break;
    }
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      Body body = make_cap(center, 0.1);
      switch (kind) {
        case 0:
        case 1: body = make_reuleaux_odd_gon(center, n, x); break;
        case 2: body = make_cap(center, x / 2.0); break;
        case 3: body = make_quarter_disk(center, x); break;
        default: body = make_regular_reduced_polygon(center, n, x); break;
      }
      const double w = diameter(body).diameter;
      const auto cw = is_constant_width(body, w, ctx.tol.eps_claim);
      const auto cd = is_constant_diameter(body, w, ctx.tol.eps_claim);
      if (cw.holds) {
        ctx.check.require(cd.holds);
        ctx.check.residual(cd.max_deficit);
      }
      if (cd.holds && w >= kHalfPi) ctx.check.require(cw.holds);
    });
  }
}

// diam(R) <= arccos(cos^2 thickness), with equality for quarter disks.
void suite_diam_bound(Context& ctx) {
  const auto ngons = ctx.ngons({3, 5, 7});
  for (std::size_t j = 0; j < ctx.count(50); ++j) {
    const bool quarter = j % 5 == 4;
    const int n = ctx.pick(ngons);
    const double delta = ctx.param(j, 0.2, 1.4);
    const SpherePoint center = ctx.rng.point();
    const double phase = ctx.rng.uniform(0.0, 2.0 * kPi);
    ctx.run_case([&] {
      const Body body = quarter ? make_quarter_disk(center, delta, phase)
                                : make_regular_reduced_polygon(center, n, delta, phase);
      const double thick = thickness(body, ctx.tol).thickness;
      const double bound = std::acos(std::cos(thick) * std::cos(thick));
      const double diam = diameter(body).diameter;
      ctx.check.residual(quarter ? std::abs(diam - bound) : diam - bound);
    });
  }
}

// diam = pi/2 exactly when the thickness is pi/2.
void suite_precise(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(16); ++j) {
    const int kind = static_cast<int>(j % 4);  // polygon, quarter disk, reuleaux, reuleaux at pi/2
    const double x = kind == 3 ? kHalfPi : ctx.param(j, 0.2, kind == 2 ? kHalfPi - 0.02 : 1.5);
    const int n = ctx.pick({3, 5, 7});
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      Body body = make_cap(center, 0.1);
      switch (kind) {
        case 0: body = make_regular_reduced_polygon(center, n, x); break;
        case 1: body = make_quarter_disk(center, x); break;
        default: body = make_reuleaux_odd_gon(center, n == 7 ? 5 : n, x); break;
      }
      const double thick = thickness(body, ctx.tol).thickness;
      const double diam = diameter(body).diameter;
      if (std::abs(thick - kHalfPi) <= ctx.tol.eps_claim) {
        ctx.check.residual(std::abs(diam - kHalfPi));
      } else {
        ctx.check.require(thick < kHalfPi && diam < kHalfPi);
      }
    });
  }
}

// Covering-radius bounds, sharp for the Reuleaux triangle of width <= pi/2
// and for the quarter disk.
void suite_bounds(Context& ctx) {
  const std::vector<double> widths = {0.6, 1.0, kHalfPi, 1.8};
  for (std::size_t j = 0; j < ctx.count(8); ++j) {
    const int kind = static_cast<int>(j % 4);  // reuleaux 3, reuleaux 5, reduced polygon, quarter disk
    double x = 0.0;
    switch (kind) {
      case 0: x = ctx.spec.values.empty() && ctx.spec.lo >= ctx.spec.hi ? widths[(j / 4) % widths.size()]
                                                                        : ctx.param(j, 0.3, 2.0); break;
      case 1: x = ctx.param(j, 0.3, kHalfPi); break;
      default: x = ctx.param(j, 0.2, 1.45); break;
    }
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      std::optional<Regime> hint;
      Body body = make_cap(center, 0.1);
      switch (kind) {
        case 0: body = make_reuleaux_odd_gon(center, 3, x); break;
        case 1: body = make_reuleaux_odd_gon(center, 5, x); break;
        case 2: body = make_regular_reduced_polygon(center, 5, x); break;
        default:
          body = make_quarter_disk(center, x);
          hint = Regime::Reduced;
          break;
      }
      const BoundReport report = covering_bound_report(body, hint, ctx.tol);
      for (const auto& b : report.bounds) {
        ctx.check.residual(-b.slack);
        const bool sharp = (kind == 0 && b.name == "dekster" && x <= kHalfPi + 1e-12) ||
                           (kind == 3 && b.name == "reduced");
        if (sharp) ctx.check.residual(std::abs(b.slack));
      }
    });
  }
}

// The polar of a body of constant width w is of constant width pi - w.
void suite_dual(Context& ctx) {
  for (std::size_t j = 0; j < ctx.count(8); ++j) {
    const int n = ctx.pick(ctx.ngons({3, 5}));
    const double w = ctx.param(j, 0.3, kHalfPi - 0.01);
    const SpherePoint center = ctx.rng.point();
    ctx.run_case([&] {
      const Body dual = polar(make_reuleaux_odd_gon(center, n, w));
      ctx.check.residual(std::abs(thickness(dual, ctx.tol).thickness - (kPi - w)));
      ctx.check.residual(is_constant_width(dual, kPi - w, ctx.tol.eps_claim).max_deviation);
    });
  }
}

// Reduced polygons fit in a disk of radius equal to their thickness centered
// at a boundary point.
void suite_cover(Context& ctx) {
  const auto ngons = ctx.ngons({3, 5, 7});
  for (std::size_t j = 0; j < ctx.count(20); ++j) {
    const int n = ctx.pick(ngons);
    const double delta = ctx.param(j, 0.2, 1.45);
    const SpherePoint center = ctx.rng.point();
    const double phase = ctx.rng.uniform(0.0, 2.0 * kPi);
    ctx.run_case([&] {
      const Body body = make_regular_reduced_polygon(center, n, delta, phase);
      ctx.check.residual(boundary_centered_cover(body).radius - delta);
    });
  }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"T_I_main", suite_main},
      {"T_I_segment", suite_segment},
      {"T_I_constant", suite_constant},
      {"T_I_strict", suite_strict},
      {"T_I_lune_at_p", suite_lune_at_p},
      {"T_II_convexhull", suite_convexhull},
      {"T_II_touching", suite_touching},
      {"T_II_diam_w", suite_diam_w},
      {"T_II_iff", suite_iff},
      {"T_III_diam_bound", suite_diam_bound},
      {"T_III_precise", suite_precise},
      {"T_IV_bounds", suite_bounds},
      {"T_IV_dual", suite_dual},
      {"T_V_cover", suite_cover},
  };
  return suites;
}

double round9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_suite_id(const std::string& id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SuiteReport run_suite(const std::string& theorem_id, const GeneratorSpec& spec, std::uint64_t seed,
                      const Tolerance& tol) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(),
                               [&](const auto& entry) { return entry.first == theorem_id; });
  if (it == suites.end()) {
    throw GeometryError(ErrorCode::UnknownTheoremId, "unknown suite '" + theorem_id + "'");
  }
  if (!tol.valid() || !(spec.density > 0.0)) {
    throw GeometryError(ErrorCode::BadParameters, "invalid tolerances or sampling density");
  }
  Context ctx{spec, Rng(seed), Checker(tol.eps_claim, spec.invert), tol};
  it->second(ctx);
  SuiteReport report;
  report.theorem_id = theorem_id;
  report.cases_run = ctx.cases;
  report.worst_violation = ctx.check.worst();
  report.pass = report.worst_violation <= tol.eps_claim;
  report.seed = seed;
  report.errors = ctx.check.take_errors();
  return report;
}

std::string to_json_line(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["theorem_id"] = report.theorem_id;
  j["cases_run"] = report.cases_run;
  j["worst_violation"] = round9(report.worst_violation);
  j["pass"] = report.pass;
  j["seed"] = report.seed;
  if (!report.errors.empty()) j["errors"] = report.errors;
  return j.dump();
}

SearchReport search_constant_diameter_counterexample(std::uint64_t seed, std::size_t trials,
                                                     double density, const Tolerance& tol) {
  if (trials < 1 || !(density > 0.0)) {
    throw GeometryError(ErrorCode::BadParameters, "the search needs trials >= 1 and density > 0");
  }
  constexpr double kJitters[] = {0.0, 1e-9, 1e-7, 1e-5, 1e-3};
  const double flag_level = 10.0 * tol.eps_claim;
  const auto base = static_cast<std::size_t>(std::lround(1024 * density));

  auto width_deviation = [](const Body& body, double w, std::size_t poles) {
    double dev = 0.0;
    for (const auto& s : width_profile(body, poles).samples) dev = std::max(dev, std::abs(s.width - w));
    return dev;
  };

  Rng rng(seed);
  SearchReport report;
  report.seed = seed;
  report.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const int n = std::array{3, 5, 7}[rng.index(3)];
    const double w = rng.uniform(0.4, 1.45);
    // The first trial is always an exact Reuleaux vertex set.
    const double jitter = trial == 0 ? 0.0 : kJitters[rng.index(std::size(kJitters))];
    const SpherePoint center = rng.point();
    std::vector<SpherePoint> vertices;
    try {
      vertices = body_vertices(make_reuleaux_odd_gon(center, n, w));
    } catch (const GeometryError&) {
      continue;
    }
    for (auto& v : vertices) {
      const auto [e1, e2] = tangent_frame(v);
      const double angle = rng.uniform(0.0, 2.0 * kPi);
      v = walk(v, e1 * std::cos(angle) + e2 * std::sin(angle), jitter * rng.uniform(0.0, 1.0));
    }
    try {
      const Body candidate = polar_rho(std::span<const SpherePoint>(vertices), w);
      const double diam = diameter(candidate).diameter;
      if (diam >= kHalfPi) continue;
      if (!is_constant_diameter(candidate, diam, tol.eps_claim).holds) continue;
      ++report.constant_diameter_candidates;
      const double dev = width_deviation(candidate, diam, base);
      if (dev <= flag_level) continue;
      const double refined = width_deviation(candidate, diam, 2 * base);
      if (refined <= flag_level) continue;
      report.flagged.push_back({trial, n, jitter, diam, dev, refined});
    } catch (const GeometryError&) {
      continue;
    }
  }
  if (report.flagged.empty()) {
    report.summary = "no counterexample found in " + std::to_string(trials) + " trials";
  } else {
    report.summary = std::to_string(report.flagged.size()) +
                     " flagged case(s) need triage; numerical artifacts are not ruled out";
  }
  return report;
}

std::string to_json_line(const SearchReport& report) {
  nlohmann::ordered_json j;
  j["search"] = "constant_diameter_counterexample";
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["constant_diameter_candidates"] = report.constant_diameter_candidates;
  j["flagged"] = nlohmann::ordered_json::array();
  for (const auto& f : report.flagged) {
    j["flagged"].push_back({{"trial", f.trial},
                            {"n", f.n},
                            {"jitter", f.jitter},
                            {"diameter", round9(f.diameter)},
                            {"width_deviation", round9(f.width_deviation)},
                            {"refined_deviation", round9(f.refined_deviation)}});
  }
  j["summary"] = report.summary;
  return j.dump();
}

}  // namespace lune
