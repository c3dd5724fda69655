#include "spindle/sphere_geom.hpp"

#include <algorithm>
#include <cmath>

#include "spindle/quadrature.hpp"

namespace spindle {

namespace {

// Unit tangent at `at` pointing along the geodesic toward `to`.
Vec3 geodesic_tangent(const Vec3& at, const Vec3& to) {
  const Vec3 t = to - at * dot(at, to);
  const double n = norm(t);
  if (n < 1e-14)
    throw DegenerateEdge("tangent undefined: vertices coincide or antipodal");
  return t * (1.0 / n);
}

}  // namespace

SphericalPolygon::SphericalPolygon(std::vector<UnitVec> vertices)
    : vertices_(std::move(vertices)) {
  const int n = size();
  if (n < 2) throw DegenerateEdge("polygon needs at least 2 vertices");
  for (int i = 0; i < n; ++i) {
    const Vec3& a = vertex(i);
    const Vec3& b = vertex(i + 1);
    const double d = dot(a, b);
    if (d > 1.0 - 1e-12)
      throw DegenerateEdge("consecutive vertices coincide");
    if (d < -1.0 + 1e-12)
      throw DegenerateEdge("consecutive vertices are antipodal");
  }
}

Lune::Lune(double a) : a_(a) {
  if (!(a > 0.0) || a > 1.0) throw OutOfRange("lune angle fraction a must be in (0, 1]");
}

Vec3 Lune::point(double lu, double lv) const {
  return {std::sin(lu), std::cos(lu) * std::cos(lv),
          std::cos(lu) * std::sin(lv)};
}

std::array<double, 2> Lune::coords(const Vec3& p) const {
  return {std::asin(std::clamp(p.x, -1.0, 1.0)), std::atan2(p.z, p.y)};
}

bool Lune::contains(const Vec3& p, double tol) const {
  const double phi = std::atan2(p.z, p.y);
  return phi >= -tol && phi <= kPi * a_ + tol;
}

Lune make_lune(double a) { return Lune(a); }

std::vector<double> interior_angles(const SphericalPolygon& p) {
  const int n = p.size();
  if (n < 3) throw DegenerateEdge("interior angles need n >= 3 (use Lune)");
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec3& v = p.vertex(i);
    const Vec3 t_prev = geodesic_tangent(v, p.vertex(i - 1));
    const Vec3 t_next = geodesic_tangent(v, p.vertex(i + 1));
    // Signed angle from t_next to t_prev about the outward normal. For a
    // CCW convex polygon this is the interior angle in (0, pi).
    double theta = std::atan2(dot(cross(t_next, t_prev), v), dot(t_next, t_prev));
    if (theta < 0.0) theta += 2.0 * kPi;
    angles[static_cast<std::size_t>(i)] = theta;
  }
  return angles;
}

bool is_convex(const SphericalPolygon& p, double tol) {
  if (p.size() < 3) return false;
  for (int i = 0; i < p.size(); ++i) {
    const Vec3& v = p.vertex(i);
    const Vec3 t_prev = geodesic_tangent(v, p.vertex(i - 1));
    const Vec3 t_next = geodesic_tangent(v, p.vertex(i + 1));
    if (dot(cross(t_next, t_prev), v) < -tol) return false;
  }
  return true;
}

double polygon_area(const SphericalPolygon& p) {
  const auto angles = interior_angles(p);
  double sum = 0.0;
  for (double th : angles) sum += th;
  return sum - (p.size() - 2) * kPi;
}

AngleReport analyze(const SphericalPolygon& p) {
  AngleReport r;
  r.interior = interior_angles(p);
  r.exterior.reserve(r.interior.size());
  double sum = 0.0;
  double min_theta = r.interior.front();
  for (double th : r.interior) {
    r.exterior.push_back(kPi - th);
    sum += th;
    min_theta = std::min(min_theta, th);
  }
  r.area = sum - (p.size() - 2) * kPi;
  r.a = r.area / (2.0 * kPi);
  r.delta = min_theta - kPi * r.a;
  return r;
}

double delta_of_polygon(const SphericalPolygon& p) {
  return analyze(p).delta;
}

DichotomyReport gen_p_dichotomy(std::span<const double> angles, int m,
                                double a) {
  const int n = static_cast<int>(angles.size());
  if (m < 0 || m > n) throw InvalidSplit("split index out of range");
  double head = 0.0, tail = 0.0;
  for (int j = 0; j < n; ++j)
    (j < m ? head : tail) += angles[static_cast<std::size_t>(j)];
  DichotomyReport r;
  r.q1 = (head - (m - 1) * kPi) / kPi;
  r.q2 = (tail - (n - m - 1) * kPi) / kPi;
  r.first_holds = r.q1 >= a;
  r.second_holds = r.q2 >= a;
  return r;
}

bool point_in_polygon(const SphericalPolygon& poly, const Vec3& p,
                      double tol) {
  for (int i = 0; i < poly.size(); ++i) {
    const Vec3 n = cross(poly.vertex(i), poly.vertex(i + 1));
    if (dot(n, p) <= tol * norm(n)) return false;
  }
  return true;
}

double distance_to_boundary(const SphericalPolygon& poly, const Vec3& p) {
  double best = kPi;
  for (int i = 0; i < poly.size(); ++i) {
    const Vec3& a = poly.vertex(i);
    const Vec3& b = poly.vertex(i + 1);
    const Vec3 n = normalized(cross(a, b));
    // Foot of the great-circle projection of p onto the edge's circle.
    const Vec3 q = p - n * dot(n, p);
    double d;
    if (norm(q) > 1e-14) {
      const Vec3 qn = normalized(q);
      const double edge = angle_between(a, b);
      // Within the arc iff it splits the arc's angles.
      if (angle_between(a, qn) <= edge && angle_between(qn, b) <= edge)
        d = std::abs(std::asin(std::clamp(dot(n, p), -1.0, 1.0)));
      else
        d = std::min(angle_between(p, a), angle_between(p, b));
    } else {
      d = 0.5 * kPi;
    }
    best = std::min(best, d);
  }
  return best;
}

Vec3 sphere_curve_velocity(const SphereCurve& c, double t) {
  if (c.vel) return c.vel(t);
  const double h = 1e-5;
  auto eval = [&](double s) {
    if (c.closed) s -= std::floor(s);
    return c.pos(s);
  };
  // Five-point stencil keeps the truncation error below the quadrature tol.
  const Vec3 d = (eval(t - 2 * h) - 8.0 * eval(t - h) + 8.0 * eval(t + h) -
                  eval(t + 2 * h)) *
                 (1.0 / (12.0 * h));
  return d;
}

double sphere_curve_length(const SphereCurve& c) {
  auto speed = [&](double t) { return norm(sphere_curve_velocity(c, t)); };
  double rough = integrate(speed, 0.0, 1.0, 1e-6);
  return integrate(speed, 0.0, 1.0, 1e-9 * (1.0 + rough));
}

double sphere_enclosed_area(const SphereCurve& c, const Vec3& frame_north) {
  // Orthonormal frame with e3 = north.
  const Vec3 e3 = normalized(frame_north);
  const Vec3 seed = std::abs(e3.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(seed, e3));
  const Vec3 e2 = cross(e3, e1);

  // integrand of the closed 1-form (1 - cos th) dphi along the curve.
  auto f = [&](double t) {
    const Vec3 p = c.pos(t);
    const Vec3 v = sphere_curve_velocity(c, t);
    const double x = dot(p, e1), y = dot(p, e2), z = dot(p, e3);
    const double vx = dot(v, e1), vy = dot(v, e2);
    const double rho2 = x * x + y * y;
    if (rho2 < 1e-28) return 0.0;  // form is smooth through the pole
    const double dphi = (x * vy - y * vx) / rho2;
    return (1.0 - z) * dphi;
  };
  double rough = integrate(f, 0.0, 1.0, 1e-6);
  return integrate(f, 0.0, 1.0, 1e-10 * (1.0 + std::abs(rough)));
}

}  // namespace spindle
