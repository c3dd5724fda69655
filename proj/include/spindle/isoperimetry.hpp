#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "spindle/rng.hpp"
#include "spindle/surface.hpp"

namespace spindle {

// Margin of one boundary configuration against the extremal profile.
// margin = L^2 - A (4 a pi - A); pass means margin >= -1e-6 (4 a pi)^2, and
// equality means |margin| <= 1e-8 (4 a pi)^2 (the cap case).
struct IsoCheckResult {
  double length = 0.0;
  double area = 0.0;
  double margin = 0.0;
  double relative_margin = 0.0;
  bool pass = false;
  bool equality = false;
};

// Boundary = disjoint union of simple closed curves on S_a; lengths and
// enclosed areas add over components (generators keep components disjoint).
IsoCheckResult check_curve(SpindleParam a,
                           std::span<const ParamCurve> components);

// Double of a convex spherical polygon: curvature 1 away from the vertex
// images, where the surface is locally a spindle tip with a_j = theta_j/pi.
class DoubledPolygon {
 public:
  explicit DoubledPolygon(SphericalPolygon p);

  const SphericalPolygon& polygon() const { return p_; }
  double a() const { return a_; }
  double total_area() const { return 4.0 * kPi * a_; }
  double delta() const { return delta_; }
  const std::vector<double>& angles() const { return angles_; }
  double vertex_a(int i) const {
    return angles_[static_cast<std::size_t>(i)] / kPi;
  }
  // Polar radius around a vertex inside which the double is isometric to a
  // neighborhood of the north tip of S_{a_j}.
  double vertex_chart_radius(int i) const {
    return chart_radius_[static_cast<std::size_t>(i)];
  }

 private:
  SphericalPolygon p_;
  double a_;
  double delta_;
  std::vector<double> angles_;
  std::vector<double> chart_radius_;
};

// Loops on the double are confined to one chart each: a curve inside one
// polygon copy, a curve in the tip chart of a vertex, or a geodesic chord
// doubled across the gluing seam (two chart segments, transitions at the
// chord endpoints).
struct InteriorLoop {
  SphereCurve curve;  // inside the open polygon, one copy
};
struct VertexLoop {
  int vertex;
  ParamCurve curve;  // spindle coordinates of S_{a_j}, near u = pi/2
};
struct ChordLoop {
  int edge_from;  // edge index (vertex k -> k+1)
  double t_from;  // position along the edge, in (0, 1)
  int edge_to;
  double t_to;
};
using PolygonLoop = std::variant<InteriorLoop, VertexLoop, ChordLoop>;

IsoCheckResult check_curve(const DoubledPolygon& dp,
                           std::span<const PolygonLoop> loops);

// Sum mechanism: positive (L_j, A_j) with L_j^2 >= A_j (4 pi a - A_j) and
// m >= 2 force the strict inequality for the summed quantities.
bool lemma_sum_check(std::span<const double> lengths,
                     std::span<const double> areas, double a);

// Max residual of L(t) L'(t) = 2 a pi - t for the cap profile
// L(t)^2 = t (4 a pi - t), using the closed-form derivative.
double profile_ode_identity(SpindleParam a, std::span<const double> t_grid);

// Geodesically convex subsets of the sphere.
using ConvexRegion = std::variant<SphericalPolygon, Lune>;

double region_area(const ConvexRegion& w);
bool region_contains(const ConvexRegion& w, const Vec3& p, double tol = 1e-9);

// A competitor inside W: either a closed loop in the interior, or an open
// arc whose two endpoints lie on the boundary of W. The enclosed region
// sits on the left of the travel direction.
struct SubsetCurve {
  SphereCurve curve;
  bool boundary_arc = false;
};

// Doubles (L, A) across the boundary of W and checks the doubled
// configuration; the reported margin is L^2 - A (2 pi a - A).
IsoCheckResult check_convex_subset(const ConvexRegion& w,
                                   const SubsetCurve& curve);

// Randomized curve families. Every generated boundary is a finite union of
// disjoint smooth simple closed curves.
enum class FamilyKind {
  PerturbedCaps,     // latitude circles with k >= 2 Fourier wobble
  OffCenterCircles,  // wobbly circles away from the tips
  StarShaped,        // star curves around a tip
  MultiComponent     // cap plus a disjoint small loop
};

struct SpindleFamilyConfig {
  SpindleParam a;
  FamilyKind kind = FamilyKind::PerturbedCaps;
  int count = 200;
  std::uint64_t seed = 7;
};

// Each family member is a disjoint union of closed curves. The first
// member of a PerturbedCaps family is an exact latitude circle, the
// equality witness.
std::vector<std::vector<ParamCurve>> generate_spindle_family(
    const SpindleFamilyConfig& cfg);

enum class PolygonFamilyKind {
  InteriorDiscs,  // wobbly geodesic discs in one copy
  VertexCaps,     // star curves in a vertex tip chart
  DoubledChords,  // geodesic chords doubled across the seam
  MultiComponent  // interior disc plus a disjoint vertex cap
};

struct PolygonFamilyConfig {
  PolygonFamilyKind kind = PolygonFamilyKind::InteriorDiscs;
  int count = 60;
  std::uint64_t seed = 7;
};

std::vector<std::vector<PolygonLoop>> generate_polygon_family(
    const DoubledPolygon& dp, const PolygonFamilyConfig& cfg);

// Random convex spherical polygon with n_min..n_max vertices, CCW, built
// from jittered radii around a random center and rejection-tested for
// convexity.
SphericalPolygon random_convex_polygon(Rng& rng, int n_min, int n_max);

}  // namespace spindle
