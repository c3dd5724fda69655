#include "spindle/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "spindle/quadrature.hpp"

namespace spindle {

double tip_profile_w(SpindleParam a, double rho) {
  if (rho < 0.0 || rho > a.a + 1e-12)
    throw OutOfRange("tip profile radius must lie in [0, a]");
  rho = std::min(rho, a.a);
  return tip_coordinate(a) - profile_g(a, std::acos(rho / a.a));
}

// w'(rho) = sqrt((1 - a^2 + rho^2) / (a^2 - rho^2))
double tip_profile_w1(SpindleParam a, double rho) {
  if (rho < 0.0 || rho >= a.a)
    throw OutOfRange("w' needs rho in [0, a)");
  const double num = 1.0 - a.a * a.a + rho * rho;
  const double den = a.a * a.a - rho * rho;
  return std::sqrt(num / den);
}

// w''(rho) = rho / ((a^2 - rho^2)^{3/2} sqrt(1 - a^2 + rho^2))
double tip_profile_w2(SpindleParam a, double rho) {
  if (rho < 0.0 || rho >= a.a)
    throw OutOfRange("w'' needs rho in [0, a)");
  const double num = 1.0 - a.a * a.a + rho * rho;
  const double den = a.a * a.a - rho * rho;
  return rho / (den * std::sqrt(den) * std::sqrt(num));
}

double SmoothedTipProfile::w(double u) const {
  if (u <= eps) return b0 + u * u * (b1 + b2 * u * u);
  return tip_profile_w(a, u);
}

double SmoothedTipProfile::w1(double u) const {
  if (u <= eps) return u * (2.0 * b1 + 4.0 * b2 * u * u);
  return tip_profile_w1(a, u);
}

double SmoothedTipProfile::w2(double u) const {
  if (u <= eps) return 2.0 * b1 + 12.0 * b2 * u * u;
  return tip_profile_w2(a, u);
}

double SmoothedTipProfile::w3(double u) const {
  if (u <= eps) return 24.0 * b2 * u;
  throw OutOfRange("w''' of the smoothed profile is only used on [0, eps]");
}

double SmoothedTipProfile::curvature(double u) const {
  if (u < 0.0 || u > eps + 1e-15)
    throw OutOfRange("smoothed curvature is defined on [0, eps]");
  const double p = 2.0 * b1 + 4.0 * b2 * u * u;
  const double q = 2.0 * b1 + 12.0 * b2 * u * u;
  const double slope = u * p;
  const double d = 1.0 + slope * slope;
  return p * q / (d * d);
}

SmoothedTipProfile smoothing_coeffs(SpindleParam a, double eps) {
  if (!(eps > 0.0) || eps >= a.a)
    throw OutOfRange("eps must lie in (0, a)");
  const double w = tip_profile_w(a, eps);
  const double w1 = tip_profile_w1(a, eps);
  const double w2 = tip_profile_w2(a, eps);
  SmoothedTipProfile s{a, eps,
                       (8.0 * w - 5.0 * w1 * eps + w2 * eps * eps) / 8.0,
                       (3.0 * w1 - w2 * eps) / (4.0 * eps),
                       (-w1 + w2 * eps) / (8.0 * eps * eps * eps)};
  if (!(s.b1 > 0.0) || !(s.b2 < 0.0))
    throw EpsilonTooLarge("sign conditions b1 > 0 > b2 fail; choose smaller eps");
  if (std::abs(s.curvature(eps) - 1.0) > 1e-6)
    throw EpsilonTooLarge("curvature does not match 1 at eps");
  return s;
}

SignReport sign_conditions(const SmoothedTipProfile& s, int grid_n) {
  SignReport r;
  const double w2_eps = tip_profile_w2(s.a, s.eps);
  for (int i = 0; i <= grid_n; ++i) {
    const double u = s.eps * static_cast<double>(i) / grid_n;
    if (i > 0 && !(s.w1(u) > 0.0)) {
      r = {false, u, "w_eps' > 0"};
      return r;
    }
    if (i > 0 && !(s.w3(u) < 0.0)) {
      r = {false, u, "w_eps''' < 0"};
      return r;
    }
    if (s.w2(u) < w2_eps - 1e-12) {
      r = {false, u, "w_eps'' >= w''(eps)"};
      return r;
    }
  }
  if (!(w2_eps > 0.0)) r = {false, s.eps, "w''(eps) > 0"};
  return r;
}

double tip_curvature_mass(const SmoothedTipProfile& s) {
  // Area element of (w_eps(u), u cos v, u sin v) is u sqrt(1 + w_eps'^2).
  auto f = [&](double u) {
    const double slope = s.w1(u);
    return s.curvature(u) * u * std::sqrt(1.0 + slope * slope);
  };
  return 2.0 * kPi * integrate(f, 0.0, s.eps, 1e-12);
}

double smoothed_area(SpindleParam a, double eps) {
  const SmoothedTipProfile s = smoothing_coeffs(a, eps);
  auto cap_element = [&](double u) {
    const double slope = s.w1(u);
    return u * std::sqrt(1.0 + slope * slope);
  };
  const double cap = 2.0 * kPi * integrate(cap_element, 0.0, eps, 1e-12);
  // Belt where the surface coincides with S_a: |u| <= arccos(eps / a) in
  // the original coordinates.
  const double uc = std::acos(eps / a.a);
  auto belt_element = [&](double u) { return a.a * std::cos(u); };
  const double belt = 2.0 * kPi * integrate(belt_element, -uc, uc, 1e-12);
  return belt + 2.0 * cap;
}

double total_curvature_smoothed(SpindleParam a, double eps) {
  const SmoothedTipProfile s = smoothing_coeffs(a, eps);
  const double uc = std::acos(eps / a.a);
  auto belt_element = [&](double u) { return a.a * std::cos(u); };
  // K = 1 on the belt, so its curvature equals its area.
  const double belt = 2.0 * kPi * integrate(belt_element, -uc, uc, 1e-12);
  return belt + 2.0 * tip_curvature_mass(s);
}

double curvature_budget(double region_area, std::span<const double> tip_angles,
                        double eps, double c_hat) {
  double sum = 0.0;
  for (double theta : tip_angles) {
    if (!(theta > 0.0) || !(theta < kPi))
      throw OutOfRange("tip angles must lie in (0, pi)");
    sum += 2.0 * (kPi - theta);
  }
  return region_area + sum + c_hat * eps;
}

double calibrate_budget_constant(std::span<const double> a_grid,
                                 std::span<const double> eps_grid) {
  double worst = 0.0;
  for (double a : a_grid) {
    for (double eps : eps_grid) {
      const SmoothedTipProfile s = smoothing_coeffs(SpindleParam(a), eps);
      const double excess = tip_curvature_mass(s) - 2.0 * kPi * (1.0 - a);
      worst = std::max(worst, excess / eps);
    }
  }
  return 2.0 * worst;
}

}  // namespace spindle
