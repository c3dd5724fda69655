#pragma once

#include <vector>

#include "spindle/surface.hpp"

namespace spindle {

// Eigenvalue estimate with provenance. Shared by the shooting and FEM paths.
struct EigenResult {
  enum class Method { shooting, fem };
  double value = 0.0;
  Method method = Method::shooting;
  double discretization = 0.0;  // ODE step h, or mesh size
  double error_estimate = 0.0;
};

struct CapEigenProblem {
  double b;
  double tol = 1e-9;
  int max_bisect = 200;
};

// Radial shooting solution of (cos u w')' + lambda cos u w = 0 on [b, pi/2],
// integrated from the regular singular endpoint u = pi/2.
struct ShootingSolution {
  std::vector<double> u;     // descending grid from pi/2 - s0 to b
  std::vector<double> w;
  std::vector<double> flux;  // cos(u) w'
  int sign_changes = 0;      // zeros of w strictly inside (b, pi/2)
};

// Integrate the cap ODE for a trial eigenvalue. The singular endpoint is
// handled by a Frobenius start at s = 1e-6 and geometrically graded steps
// (h_k <= kappa s with kappa proportional to h) until the fixed step h is
// safe. Exposed for the substitution-residual and Sturm tests.
ShootingSolution shoot_cap(double b, double lambda, double h);

// First Dirichlet eigenvalue of the cap u >= b on any S_a (independent of
// a): smallest lambda with w(b) = 0 for the regular solution. Bisection on
// the "no interior zero" predicate, fixed step h = 1e-4 plus one Richardson
// refinement at h/2.
EigenResult cap_eigenvalue(double b, double tol = 1e-9);
EigenResult cap_eigenvalue(const CapEigenProblem& prob);

// Characteristic exponent alpha = -1/2 + sqrt(1/4 + eig), the homogeneity
// of the associated harmonic function; alpha (alpha + 1) = eig.
double char_exponent(double eig);

// alpha(U_{1,b}) + alpha(U_{1,-b}); >= 2, with equality only at b = 0.
double bkp_sum(double b, double tol = 1e-9);

// Certified lower bound for the first Dirichlet eigenvalue of any region
// of the given area on the double of a convex polygon of area 2 pi a:
// the eigenvalue of the cap of equal area, which depends only on b.
EigenResult faber_krahn_bound(SpindleParam a, double area, double tol = 1e-9);

}  // namespace spindle
