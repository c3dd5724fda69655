#pragma once

// Test-only oracles, independent of the implementation paths they check:
// brute-force quadrature, Riemann sums, Monte-Carlo membership counting,
// and a tangent-plane chart route to interior angles.

#include <cmath>
#include <functional>
#include <utility>

#include "spindle/isoperimetry.hpp"
#include "spindle/rng.hpp"
#include "spindle/sphere_geom.hpp"
#include "spindle/surface.hpp"

namespace oracles {

using spindle::kPi;
using spindle::Vec3;

template <class F>
double composite_simpson(F&& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

// Polyline length of a spindle-chart curve in the metric
// du^2 + a^2 cos^2(u) dv^2, with the metric frozen at segment midpoints.
inline double riemann_curve_length(double a, const spindle::ParamCurve& c,
                                   int steps) {
  double total = 0.0;
  auto prev = c.pos(0.0);
  for (int i = 1; i <= steps; ++i) {
    const auto cur = c.pos(static_cast<double>(i) / steps);
    const double du = cur[0] - prev[0];
    double dv = cur[1] - prev[1];
    const double cu = a * std::cos(0.5 * (cur[0] + prev[0]));
    total += std::sqrt(du * du + cu * cu * dv * dv);
    prev = cur;
  }
  return total;
}

// 3D polyline length of a sphere curve.
inline double riemann_sphere_length(const spindle::SphereCurve& c, int steps) {
  double total = 0.0;
  Vec3 prev = c.pos(0.0);
  for (int i = 1; i <= steps; ++i) {
    const Vec3 cur = c.pos(static_cast<double>(i) / steps);
    total += spindle::angle_between(prev, cur);
    prev = cur;
  }
  return total;
}

struct MonteCarlo {
  double estimate;
  double sigma;
};

// Area of a region of the unit sphere by uniform sampling.
inline MonteCarlo sphere_area_montecarlo(
    const std::function<bool(const Vec3&)>& inside, long samples,
    std::uint64_t seed) {
  spindle::Rng rng(seed);
  long hits = 0;
  for (long i = 0; i < samples; ++i) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    if (inside({rho * std::cos(phi), rho * std::sin(phi), z})) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {4.0 * kPi * p,
          4.0 * kPi * std::sqrt(std::max(p * (1.0 - p), 1e-12) /
                                static_cast<double>(samples))};
}

// Area of a region on S_a by sampling the chart uniformly in (sin u, v).
inline MonteCarlo spindle_area_montecarlo(
    double a, const std::function<bool(double, double)>& inside, long samples,
    std::uint64_t seed) {
  spindle::Rng rng(seed);
  long hits = 0;
  for (long i = 0; i < samples; ++i) {
    const double u = std::asin(rng.uniform(-1.0, 1.0));
    const double v = rng.uniform(0.0, 2.0 * kPi);
    if (inside(u, v)) ++hits;
  }
  const double total = 4.0 * kPi * a;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {total * p,
          total * std::sqrt(std::max(p * (1.0 - p), 1e-12) /
                            static_cast<double>(samples))};
}

// Interior angle at vertex i via an explicit rotation of the vertex to the
// pole and atan2 of the neighbors' azimuths in the tangent chart.
inline double chart_angle(const spindle::SphericalPolygon& poly, int i) {
  const Vec3 v = poly.vertex(i);
  const Vec3 z{0.0, 0.0, 1.0};
  // Rodrigues rotation taking v to the north pole.
  const Vec3 axis_raw = cross(v, z);
  const double s = norm(axis_raw);
  const double c = dot(v, z);
  auto rotate = [&](const Vec3& p) -> Vec3 {
    if (s < 1e-14) return c > 0 ? p : Vec3{p.x, -p.y, -p.z};
    const Vec3 k = axis_raw * (1.0 / s);
    const double ang = std::atan2(s, c);
    return p * std::cos(ang) + cross(k, p) * std::sin(ang) +
           k * (dot(k, p) * (1.0 - std::cos(ang)));
  };
  const Vec3 prev = rotate(poly.vertex(i - 1));
  const Vec3 next = rotate(poly.vertex(i + 1));
  double ang = std::atan2(prev.y, prev.x) - std::atan2(next.y, next.x);
  if (ang < 0.0) ang += 2.0 * kPi;
  return ang;
}

// Five-point central difference.
template <class F>
double central_diff(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h);
}

}  // namespace oracles
