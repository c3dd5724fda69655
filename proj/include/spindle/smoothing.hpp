#pragma once

#include <span>

#include "spindle/surface.hpp"

namespace spindle {

// Near a tip, S_a can be rewritten as the rotation surface
//   (w(rho), rho cos v, rho sin v),  rho in [0, a],
// with the tip translated to the origin: w(rho) = a* - g(arccos(rho / a)).
// For a < 1 the right derivative of w at 0 is sqrt(1 - a^2)/a > 0, which is
// the cone opening of the tip.
double tip_profile_w(SpindleParam a, double rho);

// Analytic derivatives via the chain rule; no finite differences, since the
// smoothing coefficient b2 divides by eps^3.
double tip_profile_w1(SpindleParam a, double rho);
double tip_profile_w2(SpindleParam a, double rho);

// C^2 quartic replacement of the tip profile on [0, eps]:
//   w_eps(u) = b0 + b1 u^2 + b2 u^4,
// with (w_eps, w_eps', w_eps'') matching (w, w', w'') at u = eps.
struct SmoothedTipProfile {
  SpindleParam a;
  double eps;
  double b0, b1, b2;

  double w(double u) const;    // quartic on [0, eps], true profile beyond
  double w1(double u) const;
  double w2(double u) const;
  double w3(double u) const;

  // Gaussian curvature of the smoothed rotation surface on [0, eps]:
  //   K(u) = (2 b1 + 4 b2 u^2)(2 b1 + 12 b2 u^2) / (1 + w_eps'(u)^2)^2.
  // K(eps) = 1, matching the constant-curvature region.
  double curvature(double u) const;
};

// Solves the three matching equations for (b0, b1, b2). Throws
// EpsilonTooLarge when the sign conditions b1 > 0 > b2 fail or the
// curvature does not match 1 at eps, which makes "eps sufficiently small"
// operational.
SmoothedTipProfile smoothing_coeffs(SpindleParam a, double eps);

struct SignReport {
  bool ok = true;
  double first_violation_u = -1.0;
  const char* condition = "";  // which inequality failed
};

// Grid check of w_eps' > 0, w_eps''' < 0 on (0, eps] and
// w_eps'' >= w''(eps) > 0 on [0, eps].
SignReport sign_conditions(const SmoothedTipProfile& s, int grid_n = 4096);

// Total curvature of the smoothed cap [0, eps] around one tip, by adaptive
// quadrature of K against the area element; tends to 2 pi (1 - a).
double tip_curvature_mass(const SmoothedTipProfile& s);

// Area of the smoothed surface S_{a, eps}; within C eps of 4 pi a.
double smoothed_area(SpindleParam a, double eps);

// Numerical total curvature of S_{a, eps}: spike regions by quadrature of
// the closed-form K, constant-curvature belt by its area. Equals 4 pi.
double total_curvature_smoothed(SpindleParam a, double eps);

// Upper bound Area(V) + 2 sum_j (pi - theta_j) + C_hat * eps for the total
// curvature of a region V containing the tips with angles theta_j.
double curvature_budget(double region_area, std::span<const double> tip_angles,
                        double eps, double c_hat);

// Calibrated constant for the eps term: twice the largest observed ratio
// (tip curvature mass - 2 pi (1 - a)) / eps over the given grid. Reported
// as a calibration, never asserted as an exact value.
double calibrate_budget_constant(std::span<const double> a_grid,
                                 std::span<const double> eps_grid);

}  // namespace spindle
