#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spindle/quadrature.hpp"

using namespace spindle;

TEST_CASE("polynommomials and classic integrals are exact") {
  CHECK(integrate([](double x) { return x * x * x * x * x * x * x; }, 0.0,
                  1.0, 1e-14) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-13) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-13) == 0.0);
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -3.0, 5.0,
                  1e-12) == doctest::Approx(1.7724538505055160).epsilon(1e-12));
}

TEST_CASE("agrees with a brute-force Simpson oracle on the profile integrand") {
  auto f = [](double t) {
    const double s = std::sin(t);
    return std::sqrt(1.0 - 0.25 * s * s);
  };
  const double simpson = oracles::composite_simpson(f, 0.0, 0.5 * kPi, 1000000);
  CHECK(std::abs(integrate(f, 0.0, 0.5 * kPi, 1e-12) - simpson) < 1e-10);
}

TEST_CASE("reversed limits flip the sign") {
  auto f = [](double x) { return std::cos(x); };
  CHECK(integrate(f, 1.0, 0.0, 1e-12) ==
        doctest::Approx(-std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("interval budget exhaustion raises QuadratureFailure") {
  auto nasty = [](double x) { return std::sin(1.0 / (x * x + 1e-14)); };
  CHECK_THROWS_AS(integrate(nasty, 0.0, 1.0, 1e-14, 8), QuadratureFailure);
}
