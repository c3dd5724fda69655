#include "spindle/surface.hpp"

#include <cmath>
#include <vector>

#include "spindle/quadrature.hpp"

namespace spindle {

double profile_g(SpindleParam a, double u) {
  if (std::abs(u) > 0.5 * kPi + 1e-12)
    throw OutOfRange("profile coordinate |u| must not exceed pi/2");
  const double m = a.a * a.a;
  auto f = [m](double t) {
    const double s = std::sin(t);
    return std::sqrt(1.0 - m * s * s);
  };
  return integrate(f, 0.0, u, 1e-12);
}

double profile_h(SpindleParam a, double u) { return a.a * std::cos(u); }

double tip_coordinate(SpindleParam a) { return profile_g(a, 0.5 * kPi); }

double cap_area(const Cap& c) {
  return 2.0 * c.a.a * kPi * (1.0 - std::sin(c.b));
}

double cap_perimeter(const Cap& c) {
  return 2.0 * c.a.a * kPi * std::cos(c.b);
}

double iso_profile(SpindleParam a, double area) {
  const double total = 4.0 * a.a * kPi;
  if (!(area > 0.0) || !(area < total))
    throw OutOfRange("area must lie strictly between 0 and 4 a pi");
  return std::sqrt(area * (total - area));
}

Cap cap_with_area(SpindleParam a, double area) {
  const double total = 4.0 * a.a * kPi;
  if (!(area > 0.0) || !(area < total))
    throw OutOfRange("area must lie strictly between 0 and 4 a pi");
  return Cap(a, std::asin(1.0 - area / (2.0 * a.a * kPi)));
}

SpindlePoint lune_isometry(SpindleParam a, double lu, double lv) {
  if (std::abs(lu) > 0.5 * kPi + 1e-12 || lv < -1e-12 || lv > a.a * kPi + 1e-12)
    throw OutOfRange("lune coordinates out of range");
  return SpindlePoint(lu, lv / a.a);
}

std::array<double, 2> curve_velocity(const ParamCurve& c, double t) {
  if (c.vel) return c.vel(t);
  const double h = 1e-5;
  auto eval = [&](double s) {
    if (c.closed) s -= std::floor(s);
    return c.pos(s);
  };
  const auto m2 = eval(t - 2 * h), m1 = eval(t - h);
  const auto p1 = eval(t + h), p2 = eval(t + 2 * h);
  const double inv = 1.0 / (12.0 * h);
  return {(m2[0] - 8 * m1[0] + 8 * p1[0] - p2[0]) * inv,
          (m2[1] - 8 * m1[1] + 8 * p1[1] - p2[1]) * inv};
}

double curve_length(SpindleParam a, const ParamCurve& c) {
  auto speed = [&](double t) {
    const auto p = c.pos(t);
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]) ||
        std::abs(p[0]) > 0.5 * kPi + 1e-12)
      throw NonFinite("curve leaves the spindle coordinate chart");
    const auto v = curve_velocity(c, t);
    const double cu = a.a * std::cos(p[0]);
    return std::sqrt(v[0] * v[0] + cu * cu * v[1] * v[1]);
  };
  const double rough = integrate(speed, 0.0, 1.0, 1e-6);
  return integrate(speed, 0.0, 1.0, 1e-9 * (1.0 + rough));
}

bool curve_self_intersects(const ParamCurve& c, int samples) {
  struct Seg {
    double u0, v0, u1, v1;
  };
  std::vector<Seg> segs;
  segs.reserve(static_cast<std::size_t>(samples));
  auto p_prev = c.pos(0.0);
  for (int i = 1; i <= samples; ++i) {
    auto p = c.pos(static_cast<double>(i) / samples);
    // Unwrap v so each segment is short in the lifted coordinate.
    double dv = p[1] - p_prev[1];
    dv -= 2.0 * kPi * std::round(dv / (2.0 * kPi));
    segs.push_back({p_prev[0], p_prev[1], p[0], p_prev[1] + dv});
    p_prev = {p[0], p_prev[1] + dv};
  }
  auto crosses = [](const Seg& s, const Seg& t, double shift) {
    const double ax = s.v0, ay = s.u0, bx = s.v1, by = s.u1;
    const double cx = t.v0 + shift, cy = t.u0;
    const double dx = t.v1 + shift, dy = t.u1;
    auto orient = [](double px, double py, double qx, double qy, double rx,
                     double ry) {
      return (qx - px) * (ry - py) - (qy - py) * (rx - px);
    };
    const double o1 = orient(ax, ay, bx, by, cx, cy);
    const double o2 = orient(ax, ay, bx, by, dx, dy);
    const double o3 = orient(cx, cy, dx, dy, ax, ay);
    const double o4 = orient(cx, cy, dx, dy, bx, by);
    return o1 * o2 < 0.0 && o3 * o4 < 0.0;
  };
  const int n = static_cast<int>(segs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // shared closing vertex
      for (double shift : {-2.0 * kPi, 0.0, 2.0 * kPi}) {
        if (crosses(segs[static_cast<std::size_t>(i)],
                    segs[static_cast<std::size_t>(j)], shift))
          return true;
      }
    }
  }
  return false;
}

double enclosed_area(SpindleParam a, const ParamCurve& c) {
  if (curve_self_intersects(c))
    throw SelfIntersection("enclosed_area requires a simple closed curve");

  auto flux_integrand = [&](double t) {
    const auto p = c.pos(t);
    if (!std::isfinite(p[0]) || std::abs(p[0]) > 0.5 * kPi + 1e-12)
      throw NonFinite("curve leaves the spindle coordinate chart");
    const auto v = curve_velocity(c, t);
    return a.a * std::sin(p[0]) * v[1];
  };
  const double rough = integrate(flux_integrand, 0.0, 1.0, 1e-6);
  const double flux =
      integrate(flux_integrand, 0.0, 1.0, 1e-10 * (1.0 + std::abs(rough)));

  auto dv_integrand = [&](double t) { return curve_velocity(c, t)[1]; };
  const double winding =
      integrate(dv_integrand, 0.0, 1.0, 1e-8) / (2.0 * kPi);
  const long wind = std::lround(winding);
  if (std::abs(winding - static_cast<double>(wind)) > 1e-6)
    throw NonFinite("closed curve has non-integer v-winding");

  const double total = 4.0 * a.a * kPi;
  int tips;
  if (wind == 1 || wind == -1)
    tips = 1;  // separates the tips; the left side holds exactly one
  else if (wind == 0)
    tips = flux >= 0.0 ? 0 : 2;  // disc in the chart, or its complement
  else
    throw SelfIntersection("simple closed curve cannot wind more than once");

  const double area = flux + 0.5 * total * tips;
  if (!(area > -1e-9) || !(area < total + 1e-9))
    throw NonFinite("enclosed area outside (0, 4 a pi)");
  return area;
}

}  // namespace spindle
