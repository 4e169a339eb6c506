#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "lune/error.hpp"

namespace lune {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Thresholds shared by predicates, optimizers and theorem checks.
struct Tolerance {
  double eps_alg = 1e-9;    // algebraic predicates (orientation, membership)
  double eps_opt = 1e-7;    // optimizer convergence
  double eps_claim = 1e-6;  // theorem checks

  bool valid() const {
    return 0.0 < eps_alg && eps_alg < eps_opt && eps_opt < eps_claim && eps_claim < 1e-3;
  }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// A point of the unit sphere. Construction re-normalizes the input, so
/// every instance has unit norm up to rounding.
class SpherePoint {
 public:
  SpherePoint() : v_{0.0, 0.0, 1.0} {}
  SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}
  explicit SpherePoint(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  std::array<double, 3> coords() const { return {v_.x, v_.y, v_.z}; }

  SpherePoint operator-() const { return SpherePoint(-v_, Unchecked{}); }

  // Lexicographic order on coordinates; used only to break ties.
  bool lex_less(const SpherePoint& o) const;

 private:
  struct Unchecked {};
  SpherePoint(const Vec3& v, Unchecked) : v_(v) {}
  Vec3 v_;
};

inline double dot(const SpherePoint& a, const SpherePoint& b) { return dot(a.vec(), b.vec()); }

/// Geodesic arc ab, the shorter great-circle piece between non-antipodal points.
struct GeodesicArc {
  SpherePoint a;
  SpherePoint b;
  double length() const;
};

struct Circle {
  SpherePoint center;
  double radius = 0.0;
};

/// Spherical distance |ab| in [0, pi], via atan2(|a x b|, a.b).
double distance(const SpherePoint& a, const SpherePoint& b);

SpherePoint antipode(const SpherePoint& p);

/// Unit-speed geodesic interpolation along arc ab; t in [0, 1].
SpherePoint interpolate(const SpherePoint& a, const SpherePoint& b, double t,
                        double eps_alg = Tolerance{}.eps_alg);

/// Raw scalar triple product a.(b x c).
double triple(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c);

/// Sign of a.(b x c); magnitudes below eps_alg count as zero.
int orient(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
           double eps_alg = Tolerance{}.eps_alg);

/// The small circle through three points (the candidate with radius <= pi/2).
Circle circumcircle(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                    double eps_alg = Tolerance{}.eps_alg);

/// Unit tangent at p pointing along the great circle toward q. When q = +-p
/// the direction is undefined; `ok` (if given) is cleared and a zero vector
/// is returned.
Vec3 tangent_toward(const SpherePoint& p, const SpherePoint& q, bool* ok = nullptr);

/// The point at distance s from p along the geodesic ray toward q.
SpherePoint move_toward(const SpherePoint& p, const SpherePoint& q, double s);

/// Walk distance s from p along the unit tangent direction t (t orthogonal to p).
SpherePoint walk(const SpherePoint& p, const Vec3& t, double s);

/// A right-handed orthonormal tangent basis (e1, e2) at c, with e1 x e2 = c.
std::array<Vec3, 2> tangent_frame(const SpherePoint& c);

/// Point at distance r from c in direction angle phi of the frame (e1, e2).
SpherePoint polar_offset(const SpherePoint& c, const Vec3& e1, const Vec3& e2, double r,
                         double phi);

/// Rotation matrix about a unit axis (Rodrigues); row-major.
struct Rotation {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
  static Rotation about(const Vec3& axis, double angle);
  Vec3 apply(const Vec3& v) const;
  SpherePoint apply(const SpherePoint& p) const;
};

}  // namespace lune
