#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "spindle/errors.hpp"

namespace spindle {

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK values).
// Even-indexed Kronrod nodes coincide with the 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
std::pair<double, double> gauss_kronrod(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kronrod = kKronrodWeights[7] * f(mid);
  double gauss = kGaussWeights[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double x = half * kKronrodNodes[i];
    const double fsum = f(mid - x) + f(mid + x);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration to an absolute tolerance. The |K15-G7|
// local estimate is a large overestimate of the K15 error for smooth
// integrands, so the returned value is usually far inside `abs_tol`.
template <class F>
double integrate(F&& f, double lo, double hi, double abs_tol,
                 int max_intervals = 4000) {
  if (lo == hi) return 0.0;
  struct Interval {
    double lo, hi, value, error;
  };
  auto [v0, e0] = detail::gauss_kronrod(f, lo, hi);
  std::vector<Interval> work{{lo, hi, v0, e0}};
  int splits = 0;
  while (true) {
    double total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      total_err += work[i].error;
      if (work[i].error > work[worst].error) worst = i;
    }
    if (total_err <= abs_tol) break;
    if (++splits > max_intervals)
      throw QuadratureFailure("adaptive quadrature did not converge");
    const Interval w = work[worst];
    const double mid = 0.5 * (w.lo + w.hi);
    auto [vl, el] = detail::gauss_kronrod(f, w.lo, mid);
    auto [vr, er] = detail::gauss_kronrod(f, mid, w.hi);
    work[worst] = {w.lo, mid, vl, el};
    work.push_back({mid, w.hi, vr, er});
  }
  double sum = 0.0;
  for (const auto& w : work) sum += w.value;
  return sum;
}

}  // namespace spindle
