#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "spindle/vec3.hpp"

namespace spindle {

inline constexpr double kPi = 3.14159265358979323846;

// Convex geodesic polygon on the unit sphere. Vertices are ordered
// counterclockwise as seen from outside; edges are minor great-circle arcs.
class SphericalPolygon {
 public:
  // Validates that consecutive vertices are distinct and non-antipodal.
  explicit SphericalPolygon(std::vector<UnitVec> vertices);

  const std::vector<UnitVec>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const UnitVec& vertex(int i) const {
    return vertices_[static_cast<std::size_t>(wrap(i))];
  }
  int wrap(int i) const {
    const int n = size();
    return ((i % n) + n) % n;
  }

 private:
  std::vector<UnitVec> vertices_;
};

// The lune of dihedral angle pi*a is kept as a dedicated descriptor rather
// than a degenerate two-vertex polygon. Its vertices sit at (+-1, 0, 0) and
// its edges are the meridians at azimuth 0 and pi*a, where a point's lune
// coordinates are (u~, v~) with p = (sin u~, cos u~ cos v~, cos u~ sin v~).
class Lune {
 public:
  explicit Lune(double a);

  double a() const { return a_; }
  double area() const { return 2.0 * kPi * a_; }
  double interior_angle() const { return kPi * a_; }
  std::array<UnitVec, 2> vertices() const {
    return {UnitVec(1, 0, 0), UnitVec(-1, 0, 0)};
  }

  Vec3 point(double lu, double lv) const;      // (u~, v~) -> sphere
  std::array<double, 2> coords(const Vec3& p) const;  // sphere -> (u~, v~)
  bool contains(const Vec3& p, double tol = 1e-12) const;

 private:
  double a_;
};

struct AngleReport {
  std::vector<double> interior;  // theta_i, radians
  std::vector<double> exterior;  // psi_i = pi - theta_i, exactly
  double area = 0.0;             // steradians, by angle excess
  double a = 0.0;                // area / (2 pi)
  double delta = 0.0;            // min theta_i - pi * a
};

// Interior angles from atan2 of tangent components at each vertex.
// For a convex CCW polygon every angle lies in (0, pi).
std::vector<double> interior_angles(const SphericalPolygon& p);

// Area by spherical excess: sum(theta) - (n - 2) pi. Requires convexity.
double polygon_area(const SphericalPolygon& p);

// Turn-direction convexity test: the cross product of consecutive edge
// tangents must point outward (along the vertex) at every vertex.
bool is_convex(const SphericalPolygon& p, double tol = 1e-10);

AngleReport analyze(const SphericalPolygon& p);

Lune make_lune(double a);

// Gap between the smallest interior angle and the lune of equal area.
double delta_of_polygon(const SphericalPolygon& p);

struct DichotomyReport {
  double q1 = 0.0;  // (sum of first m angles - (m-1) pi) / pi
  double q2 = 0.0;  // (sum of the rest      - (n-m-1) pi) / pi
  bool first_holds = false;   // q1 >= a
  bool second_holds = false;  // q2 >= a
};

// q1 + q2 = 2a identically; at least one of q1, q2 reaches a.
DichotomyReport gen_p_dichotomy(std::span<const double> angles, int m,
                                double a);

// Convex-polygon membership: p is strictly on the interior side of every
// edge's great circle.
bool point_in_polygon(const SphericalPolygon& poly, const Vec3& p,
                      double tol = 0.0);

// Geodesic distance from a point to the polygon boundary.
double distance_to_boundary(const SphericalPolygon& poly, const Vec3& p);

// Parametric curve on the unit sphere, t in [0, 1]. `vel` may be empty, in
// which case derivatives fall back to five-point finite differences.
struct SphereCurve {
  std::function<Vec3(double)> pos;
  std::function<Vec3(double)> vel;
  bool closed = true;
};

Vec3 sphere_curve_velocity(const SphereCurve& c, double t);

// Arc length by adaptive quadrature; error <= 1e-9 * (1 + L).
double sphere_curve_length(const SphereCurve& c);

// Area enclosed by a closed curve, the region lying on the left of the
// travel direction. Uses the flux form (1 - cos(colatitude)) d(azimuth) in
// a frame whose north pole is `frame_north`; the enclosed region must stay
// away from the antipode of `frame_north`.
double sphere_enclosed_area(const SphereCurve& c, const Vec3& frame_north);

}  // namespace spindle
