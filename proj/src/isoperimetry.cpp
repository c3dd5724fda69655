#include "spindle/isoperimetry.hpp"

#include <algorithm>
#include <cmath>

#include "spindle/quadrature.hpp"
#include "spindle/sphere_geom.hpp"

namespace spindle {

namespace {

IsoCheckResult margin_result(double length, double area, double total_area) {
  IsoCheckResult r;
  r.length = length;
  r.area = area;
  const double profile2 = area * (total_area - area);
  r.margin = length * length - profile2;
  r.relative_margin =
      std::abs(profile2) > 1e-12 ? r.margin / profile2 : r.margin / 1e-12;
  const double scale = total_area * total_area;
  r.pass = r.margin >= -1e-6 * scale;
  r.equality = std::abs(r.margin) <= 1e-8 * scale;
  return r;
}

Vec3 curve_centroid(const SphereCurve& c, int samples = 64) {
  Vec3 sum{};
  for (int i = 0; i < samples; ++i)
    sum = sum + c.pos(static_cast<double>(i) / samples);
  return normalized(sum);
}

}  // namespace

IsoCheckResult check_curve(SpindleParam a,
                           std::span<const ParamCurve> components) {
  double length = 0.0, area = 0.0;
  for (const auto& c : components) {
    length += curve_length(a, c);
    area += enclosed_area(a, c);
  }
  return margin_result(length, area, 4.0 * kPi * a.a);
}

DoubledPolygon::DoubledPolygon(SphericalPolygon p) : p_(std::move(p)) {
  if (!is_convex(p_)) throw ChartViolation("doubled polygon must be convex");
  const AngleReport report = analyze(p_);
  angles_ = report.interior;
  a_ = report.a;
  delta_ = report.delta;
  const int n = p_.size();
  chart_radius_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec3& v = p_.vertex(i);
    double r = 0.45 * std::min(angle_between(v, p_.vertex(i - 1)),
                               angle_between(v, p_.vertex(i + 1)));
    for (int e = 0; e < n; ++e) {
      if (e == i || e == p_.wrap(i - 1)) continue;  // edges touching v
      const Vec3& e0 = p_.vertex(e);
      const Vec3& e1 = p_.vertex(e + 1);
      const Vec3 nrm = normalized(cross(e0, e1));
      const double d = std::abs(std::asin(std::clamp(dot(nrm, v), -1.0, 1.0)));
      r = std::min(r, 0.8 * d);
    }
    chart_radius_[static_cast<std::size_t>(i)] = std::min(r, 1.3);
  }
}

IsoCheckResult check_curve(const DoubledPolygon& dp,
                           std::span<const PolygonLoop> loops) {
  const SphericalPolygon& poly = dp.polygon();
  double length = 0.0, area = 0.0;
  for (const auto& loop : loops) {
    if (const auto* il = std::get_if<InteriorLoop>(&loop)) {
      for (int i = 0; i < 32; ++i) {
        const Vec3 p = il->curve.pos(i / 32.0);
        if (!point_in_polygon(poly, p))
          throw ChartViolation("interior loop leaves the polygon copy");
      }
      length += sphere_curve_length(il->curve);
      area += sphere_enclosed_area(il->curve, curve_centroid(il->curve));
    } else if (const auto* vl = std::get_if<VertexLoop>(&loop)) {
      const double r_chart = dp.vertex_chart_radius(vl->vertex);
      for (int i = 0; i < 32; ++i) {
        const double u = vl->curve.pos(i / 32.0)[0];
        if (0.5 * kPi - u > r_chart || u > 0.5 * kPi)
          throw ChartViolation("vertex loop leaves the tip chart");
      }
      const SpindleParam aj(dp.vertex_a(vl->vertex));
      length += curve_length(aj, vl->curve);
      const double cap_area_j = enclosed_area(aj, vl->curve);
      if (cap_area_j > 2.0 * kPi * aj.a)
        throw ChartViolation("vertex loop encloses more than the tip chart");
      area += cap_area_j;
    } else {
      const auto& ch = std::get<ChordLoop>(loop);
      if (ch.edge_from == ch.edge_to)
        throw ChartViolation("chord endpoints on the same edge");
      const Vec3 x = slerp(poly.vertex(ch.edge_from),
                           poly.vertex(ch.edge_from + 1), ch.t_from);
      const Vec3 y =
          slerp(poly.vertex(ch.edge_to), poly.vertex(ch.edge_to + 1), ch.t_to);
      // Piece of P cut off on the CCW side from x to y.
      std::vector<UnitVec> piece{UnitVec(x)};
      for (int k = poly.wrap(ch.edge_from + 1);;
           k = poly.wrap(k + 1)) {
        piece.push_back(poly.vertex(k));
        if (k == ch.edge_to) break;
      }
      piece.push_back(UnitVec(y));
      const double piece_area = polygon_area(SphericalPolygon(piece));
      length += 2.0 * angle_between(x, y);
      area += 2.0 * piece_area;
    }
  }
  return margin_result(length, area, dp.total_area());
}

bool lemma_sum_check(std::span<const double> lengths,
                     std::span<const double> areas, double a) {
  if (lengths.size() != areas.size() || lengths.size() < 2)
    throw PremiseViolated("sum lemma needs m >= 2 matched pairs");
  const double circ = 4.0 * kPi * a;
  double length = 0.0, area = 0.0;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (!(lengths[j] > 0.0) || !(areas[j] > 0.0))
      throw PremiseViolated("sum lemma needs positive lengths and areas");
    if (lengths[j] * lengths[j] <
        areas[j] * (circ - areas[j]) - 1e-12 * circ * circ)
      throw PremiseViolated("pair violates L^2 >= A (4 pi a - A)");
    length += lengths[j];
    area += areas[j];
  }
  return length * length > area * (circ - area);
}

double profile_ode_identity(SpindleParam a, std::span<const double> t_grid) {
  const double total = 4.0 * kPi * a.a;
  double worst = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0) || !(t < total))
      throw OutOfRange("profile identity needs t in (0, 4 a pi)");
    const double profile = std::sqrt(t * (total - t));
    const double slope = (total - 2.0 * t) / (2.0 * std::sqrt(t * (total - t)));
    worst = std::max(worst,
                     std::abs(profile * slope - (2.0 * kPi * a.a - t)));
  }
  return worst;
}

double region_area(const ConvexRegion& w) {
  if (const auto* lune = std::get_if<Lune>(&w)) return lune->area();
  return polygon_area(std::get<SphericalPolygon>(w));
}

bool region_contains(const ConvexRegion& w, const Vec3& p, double tol) {
  if (const auto* lune = std::get_if<Lune>(&w)) return lune->contains(p, tol);
  return point_in_polygon(std::get<SphericalPolygon>(w), p, -tol);
}

namespace {

// Directed boundary edges of W in CCW order (interior on the left).
struct BoundaryEdge {
  Vec3 from, to;
  std::function<Vec3(double)> path;  // t in [0, 1], from -> to
};

std::vector<BoundaryEdge> boundary_edges(const ConvexRegion& w) {
  std::vector<BoundaryEdge> edges;
  if (const auto* lune = std::get_if<Lune>(&w)) {
    const double a = lune->a();
    const Lune l = *lune;
    // Meridian at azimuth 0 walked north-to-south, then azimuth pi a walked
    // south-to-north, keeps the interior (azimuth in (0, pi a)) on the left.
    edges.push_back({Vec3{1, 0, 0}, Vec3{-1, 0, 0}, [l](double t) {
                       return l.point(0.5 * kPi - t * kPi, 0.0);
                     }});
    edges.push_back({Vec3{-1, 0, 0}, Vec3{1, 0, 0}, [l, a](double t) {
                       return l.point(-0.5 * kPi + t * kPi, a * kPi);
                     }});
  } else {
    const auto& poly = std::get<SphericalPolygon>(w);
    for (int i = 0; i < poly.size(); ++i) {
      const Vec3 a = poly.vertex(i);
      const Vec3 b = poly.vertex(i + 1);
      edges.push_back({a, b, [a, b](double t) { return slerp(a, b, t); }});
    }
  }
  return edges;
}

// Locate a point on the boundary: (edge index, parameter).
std::pair<int, double> locate_on_boundary(
    const std::vector<BoundaryEdge>& edges, const Vec3& p, double tol) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double full = angle_between(edges[i].from, edges[i].to);
    const double t = angle_between(edges[i].from, p) / full;
    if (t < -1e-12 || t > 1.0 + 1e-12) continue;
    const Vec3 q = edges[i].path(std::clamp(t, 0.0, 1.0));
    if (norm(q - p) < tol) return {static_cast<int>(i), std::clamp(t, 0.0, 1.0)};
  }
  throw ChartViolation("arc endpoint does not lie on the region boundary");
}

}  // namespace

IsoCheckResult check_convex_subset(const ConvexRegion& w,
                                   const SubsetCurve& sc) {
  const double w_area = region_area(w);
  const double a = w_area / (2.0 * kPi);
  double length = sphere_curve_length(sc.curve);
  double area;

  if (!sc.boundary_arc) {
    for (int i = 0; i < 64; ++i) {
      if (!region_contains(w, sc.curve.pos(i / 64.0), 1e-9))
        throw ChartViolation("interior loop leaves the region");
    }
    area = sphere_enclosed_area(sc.curve, curve_centroid(sc.curve));
  } else {
    // Close the circuit along the boundary of W, walked CCW from the arc's
    // endpoint back to its start; the enclosed region is left of the arc.
    const auto edges = boundary_edges(w);
    const Vec3 p0 = sc.curve.pos(0.0);
    const Vec3 p1 = sc.curve.pos(1.0);
    auto [e1, t1] = locate_on_boundary(edges, p1, 1e-6);
    auto [e0, t0] = locate_on_boundary(edges, p0, 1e-6);

    struct Piece {
      std::function<Vec3(double)> pos;
    };
    std::vector<Piece> pieces;
    pieces.push_back({sc.curve.pos});
    int e = e1;
    double t_begin = t1;
    const int ne = static_cast<int>(edges.size());
    for (int guard = 0; guard <= ne; ++guard) {
      const bool last = (e == e0 && t_begin <= t0 + 1e-12 &&
                         !(guard == 0 && t1 > t0 + 1e-12));
      const double t_end = last ? t0 : 1.0;
      if (t_end > t_begin + 1e-12) {
        auto path = edges[static_cast<std::size_t>(e)].path;
        const double lo = t_begin, hi = t_end;
        pieces.push_back(
            {[path, lo, hi](double t) { return path(lo + (hi - lo) * t); }});
      }
      if (last) break;
      e = (e + 1) % ne;
      t_begin = 0.0;
    }

    const std::size_t np = pieces.size();
    SphereCurve circuit;
    circuit.pos = [pieces = std::move(pieces), np](double t) {
      const double scaled = std::clamp(t, 0.0, 1.0) * static_cast<double>(np);
      auto idx = std::min(static_cast<std::size_t>(scaled), np - 1);
      return pieces[idx].pos(scaled - static_cast<double>(idx));
    };
    Vec3 samples{};
    for (int i = 0; i < 128; ++i)
      samples = samples + circuit.pos(i / 128.0);
    area = sphere_enclosed_area(circuit, normalized(samples));
  }

  if (!(area > -1e-9) || area > w_area + 1e-6)
    throw ChartViolation("enclosed area outside the region");

  // Doubling sends (L, A) to (2L, 2A) on the closed double of W; the margin
  // is reported in the undoubled normalization L^2 - A (2 pi a - A).
  return margin_result(length, area, 2.0 * kPi * a);
}

// ---------------------------------------------------------------------------
// Families

namespace {

ParamCurve wobbly_latitude(double b, double amp, int k, double phase,
                           double orientation) {
  ParamCurve c;
  c.pos = [=](double t) -> std::array<double, 2> {
    const double ang = 2.0 * kPi * k * t + phase;
    return {b + amp * std::cos(ang), orientation * 2.0 * kPi * t};
  };
  c.vel = [=](double t) -> std::array<double, 2> {
    const double ang = 2.0 * kPi * k * t + phase;
    return {-amp * 2.0 * kPi * k * std::sin(ang), orientation * 2.0 * kPi};
  };
  return c;
}

// Star curve around the north tip: u = pi/2 - r0 (1 + amp cos(k tau)).
ParamCurve star_around_tip(double r0, double amp, int k, double phase,
                           double orientation) {
  ParamCurve c;
  c.pos = [=](double t) -> std::array<double, 2> {
    const double ang = 2.0 * kPi * k * t + phase;
    return {0.5 * kPi - r0 * (1.0 + amp * std::cos(ang)),
            orientation * 2.0 * kPi * t};
  };
  c.vel = [=](double t) -> std::array<double, 2> {
    const double ang = 2.0 * kPi * k * t + phase;
    return {r0 * amp * 2.0 * kPi * k * std::sin(ang), orientation * 2.0 * kPi};
  };
  return c;
}

ParamCurve wobbly_circle(SpindleParam a, double u0, double v0, double r0,
                         double amp, int k, double phase) {
  const double vscale = 1.0 / (a.a * std::cos(u0));
  ParamCurve c;
  c.pos = [=](double t) -> std::array<double, 2> {
    const double tau = 2.0 * kPi * t;
    const double r = r0 * (1.0 + amp * std::cos(k * tau + phase));
    return {u0 + r * std::cos(tau), v0 + vscale * r * std::sin(tau)};
  };
  c.vel = [=](double t) -> std::array<double, 2> {
    const double tau = 2.0 * kPi * t;
    const double r = r0 * (1.0 + amp * std::cos(k * tau + phase));
    const double dr = -r0 * amp * k * std::sin(k * tau + phase);
    return {2.0 * kPi * (dr * std::cos(tau) - r * std::sin(tau)),
            2.0 * kPi * vscale * (dr * std::sin(tau) + r * std::cos(tau))};
  };
  return c;
}

}  // namespace

std::vector<std::vector<ParamCurve>> generate_spindle_family(
    const SpindleFamilyConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<std::vector<ParamCurve>> family;
  family.reserve(static_cast<std::size_t>(cfg.count));
  const double a = cfg.a.a;
  for (int i = 0; i < cfg.count; ++i) {
    switch (cfg.kind) {
      case FamilyKind::PerturbedCaps: {
        const double b = rng.uniform(-1.2, 1.2);
        // First member is the exact latitude circle: the equality witness.
        const double amp =
            i == 0 ? 0.0
                   : rng.uniform(0.02, std::min(0.12, 0.45 * (1.45 - std::abs(b))));
        const int k = rng.uniform_int(2, 4);
        const double phase = rng.uniform(0.0, 2.0 * kPi);
        const double orient = rng.uniform() < 0.5 ? 1.0 : -1.0;
        family.push_back({wobbly_latitude(b, amp, k, phase, orient)});
        break;
      }
      case FamilyKind::OffCenterCircles: {
        double u0, rmax;
        do {
          u0 = rng.uniform(-0.9, 0.9);
          rmax = std::min({0.3, 0.5 * (0.5 * kPi - std::abs(u0)),
                           1.2 * a * std::cos(u0)});
        } while (rmax < 0.06);
        const double r0 = rng.uniform(0.06, rmax);
        const double amp = rng.uniform(0.05, 0.15);
        const int k = rng.uniform_int(2, 3);
        family.push_back({wobbly_circle(cfg.a, u0, rng.uniform(0.0, 2.0 * kPi),
                                        r0, amp, k,
                                        rng.uniform(0.0, 2.0 * kPi))});
        break;
      }
      case FamilyKind::StarShaped: {
        const double r0 = rng.uniform(0.15, 0.8);
        const double amp = rng.uniform(0.05, 0.25);
        const int k = rng.uniform_int(2, 5);
        family.push_back({star_around_tip(r0, amp, k,
                                          rng.uniform(0.0, 2.0 * kPi), -1.0)});
        break;
      }
      case FamilyKind::MultiComponent: {
        const double b1 = rng.uniform(0.3, 0.9);
        const double amp1 = rng.uniform(0.0, 0.08);
        std::vector<ParamCurve> comps;
        comps.push_back(wobbly_latitude(b1, amp1, rng.uniform_int(2, 3),
                                        rng.uniform(0.0, 2.0 * kPi), -1.0));
        double u2, rmax;
        do {
          u2 = rng.uniform(-0.9, b1 - 0.5);
          rmax = std::min({0.2, 0.5 * (0.5 * kPi - std::abs(u2)),
                           1.2 * a * std::cos(u2), 0.6 * (b1 - 0.15 - u2)});
        } while (rmax < 0.05);
        comps.push_back(wobbly_circle(cfg.a, u2, rng.uniform(0.0, 2.0 * kPi),
                                      rng.uniform(0.05, rmax),
                                      rng.uniform(0.05, 0.15),
                                      rng.uniform_int(2, 3),
                                      rng.uniform(0.0, 2.0 * kPi)));
        family.push_back(std::move(comps));
        break;
      }
    }
  }
  return family;
}

std::vector<std::vector<PolygonLoop>> generate_polygon_family(
    const DoubledPolygon& dp, const PolygonFamilyConfig& cfg) {
  Rng rng(cfg.seed);
  const SphericalPolygon& poly = dp.polygon();
  const int n = poly.size();

  auto random_interior_disc = [&](double shrink) -> InteriorLoop {
    // Random convex combination of vertices, projected to the sphere.
    Vec3 center{};
    double wsum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double wk = 0.2 + rng.uniform();
      center = center + wk * poly.vertex(k).vec();
      wsum += wk;
    }
    center = normalized(center * (1.0 / wsum));
    const double d = distance_to_boundary(poly, center);
    const double r0 = rng.uniform(0.25, 0.65) * d * shrink;
    const double amp = rng.uniform(0.05, 0.2);
    const int k = rng.uniform_int(2, 4);
    const double phase = rng.uniform(0.0, 2.0 * kPi);
    const Vec3 seed = std::abs(center.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(seed, center));
    const Vec3 e2 = cross(center, e1);
    SphereCurve c;
    c.pos = [=](double t) {
      const double tau = 2.0 * kPi * t;
      const double r = r0 * (1.0 + amp * std::cos(k * tau + phase));
      return std::cos(r) * center +
             std::sin(r) * (std::cos(tau) * e1 + std::sin(tau) * e2);
    };
    return InteriorLoop{std::move(c)};
  };

  auto random_vertex_cap = [&](int vertex, double shrink) -> VertexLoop {
    const double r_chart = dp.vertex_chart_radius(vertex);
    const double r0 = rng.uniform(0.15, 0.7) * r_chart * shrink;
    const double amp = rng.uniform(0.03, 0.18);
    return VertexLoop{vertex, star_around_tip(r0, amp, rng.uniform_int(2, 4),
                                              rng.uniform(0.0, 2.0 * kPi),
                                              -1.0)};
  };

  std::vector<std::vector<PolygonLoop>> family;
  family.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    switch (cfg.kind) {
      case PolygonFamilyKind::InteriorDiscs:
        family.push_back({random_interior_disc(1.0)});
        break;
      case PolygonFamilyKind::VertexCaps:
        family.push_back({random_vertex_cap(i % n, 1.0)});
        break;
      case PolygonFamilyKind::DoubledChords: {
        const int e_from = rng.uniform_int(0, n - 1);
        int e_to;
        do {
          e_to = rng.uniform_int(0, n - 1);
        } while (e_to == e_from);
        family.push_back({ChordLoop{e_from, rng.uniform(0.25, 0.75), e_to,
                                    rng.uniform(0.25, 0.75)}});
        break;
      }
      case PolygonFamilyKind::MultiComponent: {
        // Small interior disc plus a small vertex cap; shrink both and keep
        // the disc away from the chosen vertex so the components stay
        // disjoint on the double.
        const int vertex = i % n;
        const double r_cap_max = 0.7 * 0.4 * dp.vertex_chart_radius(vertex);
        InteriorLoop disc = random_interior_disc(0.45);
        for (int attempt = 0; attempt < 64; ++attempt) {
          const Vec3 c = curve_centroid(disc.curve);
          const double gap = angle_between(c, poly.vertex(vertex));
          if (gap > r_cap_max + 0.45 * distance_to_boundary(poly, c) + 0.05)
            break;
          disc = random_interior_disc(0.45);
        }
        VertexLoop cap = random_vertex_cap(vertex, 0.4);
        family.push_back({std::move(disc), std::move(cap)});
        break;
      }
    }
  }
  return family;
}

SphericalPolygon random_convex_polygon(Rng& rng, int n_min, int n_max) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const int n = rng.uniform_int(n_min, n_max);
    const double z = rng.uniform(-1.0, 1.0);
    const double az = rng.uniform(0.0, 2.0 * kPi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 center{rho * std::cos(az), rho * std::sin(az), z};
    const Vec3 seed = std::abs(center.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(seed, center));
    const Vec3 e2 = cross(center, e1);
    const double big_r = rng.uniform(0.3, 0.95);

    std::vector<double> phis(static_cast<std::size_t>(n));
    for (auto& p : phis) p = rng.uniform(0.0, 2.0 * kPi);
    std::sort(phis.begin(), phis.end());
    double min_gap = phis.front() + 2.0 * kPi - phis.back();
    for (std::size_t i = 1; i < phis.size(); ++i)
      min_gap = std::min(min_gap, phis[i] - phis[i - 1]);
    if (min_gap < 0.3 * (2.0 * kPi / n)) continue;

    std::vector<UnitVec> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (double phi : phis) {
      const double r = big_r * rng.uniform(0.6, 1.0);
      verts.push_back(UnitVec(std::cos(r) * center +
                              std::sin(r) * (std::cos(phi) * e1 +
                                             std::sin(phi) * e2)));
    }
    try {
      SphericalPolygon poly(std::move(verts));
      if (!is_convex(poly)) continue;
      const double area = polygon_area(poly);
      if (area < 0.05 || area > 1.9 * kPi) continue;
      return poly;
    } catch (const DegenerateEdge&) {
      continue;
    }
  }
  throw Error("random convex polygon generation did not converge");
}

}  // namespace spindle
