#pragma once

#include <array>
#include <functional>

#include "spindle/sphere_geom.hpp"

namespace spindle {

// Parameter of the constant-curvature spindle surface S_a: the double of a
// lune with dihedral angle pi*a. S_a is the surface of revolution
//   (g(u), h(u) cos v, h(u) sin v),  u in [-pi/2, pi/2], v in [0, 2 pi),
// with g(u) = int_0^u sqrt(1 - a^2 sin^2 t) dt and h(u) = a cos u. Its
// metric is du^2 + a^2 cos^2(u) dv^2, its area 4 pi a, and its Gaussian
// curvature is 1 away from the two tips at u = +-pi/2.
struct SpindleParam {
  double a;
  explicit SpindleParam(double a_in) : a(a_in) {
    if (!(a > 0.0) || a > 1.0) throw OutOfRange("spindle parameter a must be in (0, 1]");
  }
};

// Rotationally symmetric cap u >= b of S_a (a geodesic disc about a tip).
struct Cap {
  SpindleParam a;
  double b;
  Cap(SpindleParam a_in, double b_in) : a(a_in), b(b_in) {
    if (!(b > -0.5 * kPi) || !(b < 0.5 * kPi))
      throw OutOfRange("cap latitude b must be in (-pi/2, pi/2)");
  }
};

struct SpindlePoint {
  double u;
  double v;
  SpindlePoint(double u_in, double v_in) : u(u_in), v(v_in) {
    if (std::abs(u) > 0.5 * kPi + 1e-12)
      throw OutOfRange("spindle coordinate u out of range");
  }
};

// Profile height g(a, u) by adaptive quadrature (abs error <= 1e-12).
// Odd and strictly increasing in u; reduces to sin(u) when a = 1.
double profile_g(SpindleParam a, double u);

double profile_h(SpindleParam a, double u);  // a cos u

// Axial coordinate of the tips: a* = g(pi/2).
double tip_coordinate(SpindleParam a);

double cap_area(const Cap& c);       // 2 a pi (1 - sin b)
double cap_perimeter(const Cap& c);  // 2 a pi cos b

// Extremal perimeter for enclosed area A: sqrt(A (4 a pi - A)).
double iso_profile(SpindleParam a, double area);

// Invert the cap area formula; round-trips with cap_area to 1e-12.
Cap cap_with_area(SpindleParam a, double area);

// Isometry from lune coordinates (u~, v~), v~ in [0, a pi], onto one half
// of S_a: (u, v) = (u~, v~ / a).
SpindlePoint lune_isometry(SpindleParam a, double lu, double lv);

// Parametric curve in spindle coordinates, t in [0, 1] -> (u, v). The
// optional velocity avoids finite differences where the family generator
// knows the derivative in closed form.
struct ParamCurve {
  std::function<std::array<double, 2>(double)> pos;
  std::function<std::array<double, 2>(double)> vel;
  bool closed = true;
};

std::array<double, 2> curve_velocity(const ParamCurve& c, double t);

// Length in the metric du^2 + a^2 cos^2 u dv^2, adaptive quadrature with
// error <= 1e-9 (1 + L). Throws NonFinite if the curve leaves the chart.
double curve_length(SpindleParam a, const ParamCurve& c);

// Area enclosed by a simple closed curve, region on the left of travel.
//
// The flux form a sin(u) dv satisfies d(a sin u dv) = a cos u du ^ dv, the
// area element, but the chart degenerates at the tips: each tip enclosed
// contributes an extra 2 pi a. The tip count follows from the winding of v
// (+1 winds once with the south region on the left, -1 with the north) and,
// for contractible curves, from the sign of the flux integral (negative
// flux means the region is the complement and contains both tips).
double enclosed_area(SpindleParam a, const ParamCurve& c);

// Polyline self-intersection scan on the periodic (u, v) cylinder, used by
// enclosed_area to reject invalid input. Exposed for the test suite.
bool curve_self_intersects(const ParamCurve& c, int samples = 256);

}  // namespace spindle
