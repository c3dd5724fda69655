#include "spindle/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spindle {

namespace {

constexpr double kS0 = 1e-6;      // Frobenius handoff distance from pi/2
constexpr double kLambdaCap = 1e7;  // bracket expansion gives up here

// Fixed integration grid for one (b, h) pair, with cosines precomputed at
// the RK4 nodes and midpoints so that bisection over lambda is pure
// arithmetic. Steps are graded near the singular endpoint, h_k <= kappa s,
// with kappa proportional to h so the refinement study keeps a clean order.
class CapShooter {
 public:
  CapShooter(double b, double h) : h_(h) {
    const double s_end = 0.5 * kPi - b;
    const double kappa = std::min(0.5, 1000.0 * h);
    std::vector<double> s{kS0};
    while (true) {
      const double cur = s.back();
      double step = std::min(h, std::max(kappa * cur, kS0));
      if (cur + 1.5 * step >= s_end) {
        s.push_back(s_end);
        break;
      }
      s.push_back(cur + step);
    }
    u_.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) u_[i] = 0.5 * kPi - s[i];
    cos_node_.resize(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i) cos_node_[i] = std::cos(u_[i]);
    cos_mid_.resize(u_.size() - 1);
    for (std::size_t i = 0; i + 1 < u_.size(); ++i)
      cos_mid_[i] = std::cos(0.5 * (u_[i] + u_[i + 1]));
  }

  struct Outcome {
    double w_end = 0.0;
    int sign_changes = 0;
  };

  // State y = (w, cos(u) w'); w' = y2 / cos u, (cos u w')' = -lambda cos u w.
  template <class Sink>
  Outcome run(double lambda, Sink&& sink) const {
    // Series start: w = 1 + alpha s^2 + beta s^4 about the tip.
    const double alpha = -0.25 * lambda;
    const double beta = lambda * lambda / 64.0 - lambda / 96.0;
    const double s0 = kS0;
    double y1 = 1.0 + s0 * s0 * (alpha + beta * s0 * s0);
    double y2 = -std::sin(s0) * (2.0 * alpha * s0 + 4.0 * beta * s0 * s0 * s0);
    sink(0, y1, y2);
    Outcome out;
    double prev = y1;
    for (std::size_t k = 0; k + 1 < u_.size(); ++k) {
      const double du = u_[k + 1] - u_[k];
      const double c0 = cos_node_[k], cm = cos_mid_[k], c1 = cos_node_[k + 1];
      const double k1w = y2 / c0;
      const double k1f = -lambda * c0 * y1;
      double tw = y1 + 0.5 * du * k1w, tf = y2 + 0.5 * du * k1f;
      const double k2w = tf / cm;
      const double k2f = -lambda * cm * tw;
      tw = y1 + 0.5 * du * k2w;
      tf = y2 + 0.5 * du * k2f;
      const double k3w = tf / cm;
      const double k3f = -lambda * cm * tw;
      tw = y1 + du * k3w;
      tf = y2 + du * k3f;
      const double k4w = tf / c1;
      const double k4f = -lambda * c1 * tw;
      y1 += du / 6.0 * (k1w + 2.0 * (k2w + k3w) + k4w);
      y2 += du / 6.0 * (k1f + 2.0 * (k2f + k3f) + k4f);
      sink(k + 1, y1, y2);
      if (k + 2 < u_.size() && prev * y1 < 0.0) ++out.sign_changes;
      prev = y1;
    }
    out.w_end = y1;
    return out;
  }

  Outcome integrate(double lambda) const {
    return run(lambda, [](std::size_t, double, double) {});
  }

  const std::vector<double>& grid() const { return u_; }
  double step() const { return h_; }

 private:
  double h_;
  std::vector<double> u_;
  std::vector<double> cos_node_;
  std::vector<double> cos_mid_;
};

// lambda is below the first eigenvalue iff the regular solution has no
// interior zero and stays positive at b.
bool below_first(const CapShooter& shooter, double lambda) {
  const auto out = shooter.integrate(lambda);
  return out.sign_changes == 0 && out.w_end > 0.0;
}

double bisect_eigenvalue(const CapShooter& shooter, double b, double width,
                         int max_steps) {
  const double area_ratio_guess = 2.0 / (1.0 - std::sin(b));
  double lo = 0.5 * area_ratio_guess;
  double hi = 2.0 * area_ratio_guess;
  while (!below_first(shooter, lo)) {
    lo *= 0.5;
    if (lo < 1e-12)
      throw NoConvergence("no positive lower bracket for the eigenvalue");
  }
  while (below_first(shooter, hi)) {
    hi *= 2.0;
    if (hi > kLambdaCap)
      throw NoConvergence("eigenvalue bracket not found below 1e7");
  }
  int steps = 0;
  while (hi - lo > width) {
    if (++steps > max_steps)
      throw NoConvergence("bisection exceeded the step budget");
    const double mid = 0.5 * (lo + hi);
    (below_first(shooter, mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ShootingSolution shoot_cap(double b, double lambda, double h) {
  CapShooter shooter(b, h);
  ShootingSolution sol;
  sol.u = shooter.grid();
  sol.w.resize(sol.u.size());
  sol.flux.resize(sol.u.size());
  const auto out = shooter.run(lambda, [&](std::size_t k, double w, double f) {
    sol.w[k] = w;
    sol.flux[k] = f;
  });
  sol.sign_changes = out.sign_changes;
  return sol;
}

EigenResult cap_eigenvalue(const CapEigenProblem& prob) {
  const double b = prob.b;
  if (!(b > -0.5 * kPi + 1e-6) || !(b < 0.5 * kPi - 1e-3))
    throw OutOfRange("cap latitude b outside (-pi/2 + 1e-6, pi/2 - 1e-3)");
  const double tol = prob.tol;
  double h = 1e-4;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double width = std::max(0.25 * tol, 1e-13);
    CapShooter coarse(b, h), fine(b, 0.5 * h);
    const double lam_h = bisect_eigenvalue(coarse, b, width, prob.max_bisect);
    const double lam_h2 = bisect_eigenvalue(fine, b, width, prob.max_bisect);
    // One Richardson step for the order-4 integrator.
    const double extrap = lam_h2 + (lam_h2 - lam_h) / 15.0;
    const double estimate = std::max(std::abs(lam_h2 - lam_h) / 15.0, width);
    if (estimate <= tol || attempt == 3) {
      EigenResult r;
      r.value = extrap;
      r.method = EigenResult::Method::shooting;
      r.discretization = h;
      r.error_estimate = estimate;
      return r;
    }
    h *= 0.5;
  }
  throw NoConvergence("cap eigenvalue did not reach the requested tolerance");
}

EigenResult cap_eigenvalue(double b, double tol) {
  return cap_eigenvalue(CapEigenProblem{b, tol, 200});
}

double char_exponent(double eig) {
  if (eig < 0.0) throw NegativeEigenvalue("characteristic exponent needs eig >= 0");
  return -0.5 + std::sqrt(0.25 + eig);
}

double bkp_sum(double b, double tol) {
  if (!(std::abs(b) < 0.5 * kPi - 1e-3))
    throw OutOfRange("bkp_sum needs |b| < pi/2 - 1e-3");
  const double ap = char_exponent(cap_eigenvalue(b, tol).value);
  const double am = char_exponent(cap_eigenvalue(-b, tol).value);
  return ap + am;
}

EigenResult faber_krahn_bound(SpindleParam a, double area, double tol) {
  const Cap cap = cap_with_area(a, area);
  return cap_eigenvalue(cap.b, tol);
}

}  // namespace spindle
