#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "spindle/isoperimetry.hpp"
#include "spindle/sphere_geom.hpp"

namespace spindle {

// Conforming triangulation of a region V inside a geodesically convex W,
// flat triangles with vertices on the unit sphere. Boundary edges carry the
// mixed-condition tag: Neumann on dV intersect dW, Dirichlet on the rest.
struct SurfaceMesh {
  enum class Tag { Dirichlet, Neumann };
  struct BoundaryEdge {
    int v0, v1;
    Tag tag;
  };

  std::vector<UnitVec> vertices;
  std::vector<std::array<int, 3>> triangles;  // positively oriented
  std::vector<BoundaryEdge> boundary;
  double h = 0.0;          // max geodesic edge length
  double min_angle = 0.0;  // degrees, over all triangle corners
};

// Optional per-curve tag overrides, keyed by the boundary curve names of
// each region kind ("latitude", "meridian0", "meridian1", "circle",
// "edge0", ...). Unlisted curves keep their default tags.
using TagOverrides = std::map<std::string, SurfaceMesh::Tag>;

// V = { u~ >= b } of the lune (or the complementary piece). The latitude
// curve is Dirichlet, the meridian edges Neumann.
struct LatitudeCapSpec {
  Lune lune;
  double b;
  bool complement = false;
  TagOverrides tags{};
};

// Geodesic disc strictly inside W; the circle is Dirichlet.
struct GeodesicDiscSpec {
  ConvexRegion w;
  UnitVec center;
  double radius;
  TagOverrides tags{};
};

// Convex sub-polygon of a polygon W; edges lying on dW become Neumann,
// the cut edges Dirichlet.
struct PolygonPieceSpec {
  ConvexRegion w;
  std::vector<UnitVec> piece;
  TagOverrides tags{};
};

using RegionSpec = std::variant<LatitudeCapSpec, GeodesicDiscSpec,
                                PolygonPieceSpec>;

// Exact area of V (closed forms / angle excess).
double region_spec_area(const RegionSpec& spec);

// Area of the ambient region W.
double region_spec_ambient_area(const RegionSpec& spec);

// Geodesic distance from p to the boundary of W.
double region_boundary_distance(const ConvexRegion& w, const Vec3& p);

bool on_region_boundary(const ConvexRegion& w, const Vec3& p, double tol);

// Chart-based mesher: boundary sampled on the exact curves (spacing <=
// h/2), interior filled with a triangular lattice in an azimuthal
// equidistant chart, Delaunay-triangulated, then 5 Laplacian smoothing
// passes projected back to the sphere. Throws MeshQualityFailure if the
// 15-degree minimum angle cannot be met and BadRegionSpec if V is not
// contained in W.
SurfaceMesh mesh_region(const RegionSpec& spec, double h);

// Closed test surface: subdivided icosahedron projected to the sphere.
SurfaceMesh icosphere(int subdivisions);

}  // namespace spindle
