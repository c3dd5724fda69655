#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spindle/isoperimetry.hpp"
#include "spindle/sphere_geom.hpp"

using namespace spindle;

namespace {

SphericalPolygon octant() {
  return SphericalPolygon({UnitVec(1, 0, 0), UnitVec(0, 1, 0), UnitVec(0, 0, 1)});
}

}  // namespace

TEST_CASE("UnitVec renormalizes and rejects far-off input") {
  const UnitVec v(1.0 + 5e-7, 0.0, 0.0);
  CHECK(v.x() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(UnitVec(1.1, 0.0, 0.0), OutOfRange);
  CHECK_THROWS_AS(UnitVec(0.0, 0.0, 0.0), NonFinite);
}

TEST_CASE("octant triangle has three right angles and area pi/2") {
  const auto poly = octant();
  for (double theta : interior_angles(poly))
    CHECK(theta == doctest::Approx(0.5 * kPi).epsilon(1e-13));
  CHECK(polygon_area(poly) == doctest::Approx(0.5 * kPi).epsilon(1e-13));
  CHECK(is_convex(poly));
}

TEST_CASE("small equilateral triangles approach the Euclidean limit pi/3") {
  auto make = [](double colat) {
    std::vector<UnitVec> v;
    for (int k = 0; k < 3; ++k) {
      const double phi = 2.0 * kPi * k / 3.0;
      v.emplace_back(std::sin(colat) * std::cos(phi),
                     std::sin(colat) * std::sin(phi), std::cos(colat));
    }
    return SphericalPolygon(v);
  };
  const double err_big = std::abs(interior_angles(make(1e-2))[0] - kPi / 3.0);
  const double err_small = std::abs(interior_angles(make(1e-3))[0] - kPi / 3.0);
  CHECK(err_big < 1e-3);
  CHECK(err_small < err_big);
}

TEST_CASE("random convex polygon angles match the tangent-chart oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const SphericalPolygon poly = random_convex_polygon(rng, 5, 5);
    const auto angles = interior_angles(poly);
    for (int i = 0; i < poly.size(); ++i)
      CHECK(angles[static_cast<std::size_t>(i)] ==
            doctest::Approx(oracles::chart_angle(poly, i)).epsilon(1e-11));
  }
}

TEST_CASE("lune descriptor: area, angles, containment") {
  const Lune lune = make_lune(0.25);
  CHECK(lune.area() == doctest::Approx(kPi / 2.0));
  CHECK(lune.interior_angle() == doctest::Approx(kPi / 4.0));
  CHECK(make_lune(1.0).area() == doctest::Approx(2.0 * kPi));
  CHECK(make_lune(0.5).area() == doctest::Approx(kPi));
  CHECK(lune.contains(lune.point(0.3, 0.1)));
  CHECK(!lune.contains(lune.point(0.3, kPi * 0.3)));
  CHECK_THROWS_AS(make_lune(0.0), OutOfRange);
  CHECK_THROWS_AS(make_lune(1.5), OutOfRange);
}

TEST_CASE("polygon area against a 1e7-sample Monte-Carlo oracle") {
  Rng rng(99);
  const SphericalPolygon poly = random_convex_polygon(rng, 4, 4);
  const double area = polygon_area(poly);
  const auto mc = oracles::sphere_area_montecarlo(
      [&](const Vec3& p) { return point_in_polygon(poly, p); }, 10000000, 7);
  CHECK(std::abs(area - mc.estimate) < 3.0 * mc.sigma);
}

TEST_CASE("polygon area matches Monte-Carlo on 50 random convex polygons") {
  Rng rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    const SphericalPolygon poly = random_convex_polygon(rng, 3, 8);
    const double area = polygon_area(poly);
    const auto mc = oracles::sphere_area_montecarlo(
        [&](const Vec3& p) { return point_in_polygon(poly, p); }, 1000000,
        1000 + static_cast<std::uint64_t>(trial));
    CHECK(std::abs(area - mc.estimate) < 3.0 * mc.sigma);
  }
}

TEST_CASE("angle report: exterior angles, Gauss-Bonnet sum, delta") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SphericalPolygon poly = random_convex_polygon(rng, 3, 8);
    const AngleReport rep = analyze(poly);
    double psi_sum = 0.0;
    for (std::size_t i = 0; i < rep.interior.size(); ++i) {
      CHECK(rep.exterior[i] == kPi - rep.interior[i]);  // exact by definition
      psi_sum += rep.exterior[i];
      CHECK(rep.interior[i] > kPi * rep.a - 1e-12);
    }
    CHECK(psi_sum == doctest::Approx(2.0 * kPi * (1.0 - rep.a)).epsilon(1e-10));
    CHECK(rep.delta > 0.0);
  }
}

TEST_CASE("delta of the octant is pi/4") {
  CHECK(delta_of_polygon(octant()) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("angle split dichotomy") {
  const auto poly = octant();
  const auto angles = interior_angles(poly);
  const double a = polygon_area(poly) / (2.0 * kPi);

  SUBCASE("octant, m = 0") {
    const DichotomyReport d = gen_p_dichotomy(angles, 0, a);
    CHECK(d.q1 == doctest::Approx(1.0));
    CHECK(d.q2 == doctest::Approx(-0.5));
    CHECK((d.first_holds || d.second_holds));
  }
  SUBCASE("lune angle pair splits evenly") {
    const std::vector<double> lune_angles{0.3 * kPi, 0.3 * kPi};
    const DichotomyReport d = gen_p_dichotomy(lune_angles, 1, 0.3);
    CHECK(d.q1 == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(d.q2 == doctest::Approx(0.3).epsilon(1e-14));
  }
  SUBCASE("invalid split index") {
    CHECK_THROWS_AS(gen_p_dichotomy(angles, 4, a), InvalidSplit);
    CHECK_THROWS_AS(gen_p_dichotomy(angles, -1, a), InvalidSplit);
  }
  SUBCASE("identity and dichotomy over random polygons, all splits/orders") {
    Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
      const SphericalPolygon poly2 = random_convex_polygon(rng, 3, 8);
      const AngleReport rep = analyze(poly2);
      std::vector<double> rotated = rep.interior;
      for (int rot = 0; rot < poly2.size(); ++rot) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        for (int m = 0; m <= poly2.size(); ++m) {
          const DichotomyReport d = gen_p_dichotomy(rotated, m, rep.a);
          CHECK(std::abs(d.q1 + d.q2 - 2.0 * rep.a) <= 1e-12);
          CHECK(std::max(d.q1, d.q2) >= rep.a - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("degenerate edges are rejected") {
  CHECK_THROWS_AS(SphericalPolygon({UnitVec(1, 0, 0), UnitVec(1, 0, 0),
                                    UnitVec(0, 0, 1)}),
                  DegenerateEdge);
  CHECK_THROWS_AS(SphericalPolygon({UnitVec(1, 0, 0), UnitVec(-1, 0, 0),
                                    UnitVec(0, 0, 1)}),
                  DegenerateEdge);
  CHECK_THROWS_AS(interior_angles(SphericalPolygon(
                      {UnitVec(1, 0, 0), UnitVec(0, 1, 0)})),
                  DegenerateEdge);
}

TEST_CASE("non-convex vertex order is detected") {
  // Swapping two vertices of a convex quad produces a reflex corner.
  Rng rng(77);
  const SphericalPolygon poly = random_convex_polygon(rng, 4, 4);
  std::vector<UnitVec> swapped = poly.vertices();
  std::swap(swapped[1], swapped[2]);
  CHECK(!is_convex(SphericalPolygon(swapped)));
}

TEST_CASE("sphere curves: great circle length and polar cap area") {
  SphereCurve equator;
  equator.pos = [](double t) {
    return Vec3{std::cos(2.0 * kPi * t), std::sin(2.0 * kPi * t), 0.0};
  };
  CHECK(sphere_curve_length(equator) == doctest::Approx(2.0 * kPi).epsilon(1e-10));

  const double colat = 0.7;
  SphereCurve cap;  // CCW seen from the pole: the cap is on the left
  cap.pos = [colat](double t) {
    return Vec3{std::sin(colat) * std::cos(2.0 * kPi * t),
                std::sin(colat) * std::sin(2.0 * kPi * t), std::cos(colat)};
  };
  const double area = sphere_enclosed_area(cap, Vec3{0, 0, 1});
  CHECK(area == doctest::Approx(2.0 * kPi * (1.0 - std::cos(colat))).epsilon(1e-9));

  // Against the Riemann polyline oracle.
  CHECK(sphere_curve_length(cap) ==
        doctest::Approx(oracles::riemann_sphere_length(cap, 1000000))
            .epsilon(1e-6));
}

TEST_CASE("distance to polygon boundary") {
  const auto poly = octant();
  const Vec3 centroid = normalized(Vec3{1, 1, 1});
  CHECK(distance_to_boundary(poly, centroid) ==
        doctest::Approx(std::asin(1.0 / std::sqrt(3.0))).epsilon(1e-12));
  CHECK(distance_to_boundary(poly, Vec3{1, 0, 0}) ==
        doctest::Approx(0.0).epsilon(1e-12));
}
