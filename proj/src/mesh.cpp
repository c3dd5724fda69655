#include "spindle/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace spindle {

namespace {

// ---------------------------------------------------------------------------
// 2D Delaunay (Bowyer-Watson with triangle adjacency and walk location).

struct Delaunay2D {
  using P2 = std::array<double, 2>;

  struct Tri {
    std::array<int, 3> v;    // CCW
    std::array<int, 3> n;    // neighbor across edge opposite v[k], -1 if none
    bool alive = true;
  };

  std::vector<P2> pts;
  std::vector<Tri> tris;
  int last_alive = 0;

  static double orient(const P2& a, const P2& b, const P2& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  }

  double incircle(const Tri& t, const P2& p) const {
    const P2& a = pts[static_cast<std::size_t>(t.v[0])];
    const P2& b = pts[static_cast<std::size_t>(t.v[1])];
    const P2& c = pts[static_cast<std::size_t>(t.v[2])];
    const double ax = a[0] - p[0], ay = a[1] - p[1];
    const double bx = b[0] - p[0], by = b[1] - p[1];
    const double cx = c[0] - p[0], cy = c[1] - p[1];
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) +
           a2 * (bx * cy - by * cx);
  }

  explicit Delaunay2D(double cx, double cy, double radius) {
    const double r = 16.0 * radius;
    pts.push_back({cx - 1.31 * r, cy - 0.97 * r});
    pts.push_back({cx + 1.43 * r, cy - 1.03 * r});
    pts.push_back({cx + 0.037 * r, cy + 1.61 * r});
    tris.push_back({{0, 1, 2}, {-1, -1, -1}, true});
  }

  int locate(const P2& p) const {
    int t = last_alive;
    if (!tris[static_cast<std::size_t>(t)].alive) {
      t = -1;
      for (std::size_t i = 0; i < tris.size(); ++i)
        if (tris[i].alive) t = static_cast<int>(i);
    }
    for (int guard = 0; guard < 8 * static_cast<int>(tris.size()) + 16;
         ++guard) {
      const Tri& tri = tris[static_cast<std::size_t>(t)];
      int move = -1;
      for (int k = 0; k < 3; ++k) {
        const P2& a = pts[static_cast<std::size_t>(tri.v[(k + 1) % 3])];
        const P2& b = pts[static_cast<std::size_t>(tri.v[(k + 2) % 3])];
        if (orient(a, b, p) < -1e-15 && tri.n[static_cast<std::size_t>(k)] >= 0) {
          move = tri.n[static_cast<std::size_t>(k)];
          break;
        }
      }
      if (move < 0) return t;
      t = move;
    }
    // Walk cycled (should not happen); fall back to a scan.
    for (std::size_t i = 0; i < tris.size(); ++i) {
      if (!tris[i].alive) continue;
      const Tri& tri = tris[i];
      bool inside = true;
      for (int k = 0; k < 3 && inside; ++k)
        inside = orient(pts[static_cast<std::size_t>(tri.v[(k + 1) % 3])],
                        pts[static_cast<std::size_t>(tri.v[(k + 2) % 3])],
                        p) >= -1e-12;
      if (inside) return static_cast<int>(i);
    }
    throw MeshQualityFailure("point location failed during triangulation");
  }

  void insert(const P2& p) {
    const int seed = locate(p);
    // Grow the cavity of circumcircle-violating triangles.
    std::vector<int> cavity{seed};
    std::set<int> in_cavity{seed};
    struct Wall {
      int a, b, outer;
    };
    std::vector<Wall> walls;
    for (std::size_t i = 0; i < cavity.size(); ++i) {
      const Tri tri = tris[static_cast<std::size_t>(cavity[i])];
      for (int k = 0; k < 3; ++k) {
        const int nb = tri.n[static_cast<std::size_t>(k)];
        const int a = tri.v[(k + 1) % 3];
        const int b = tri.v[(k + 2) % 3];
        if (nb >= 0 && !in_cavity.count(nb)) {
          if (incircle(tris[static_cast<std::size_t>(nb)], p) > 1e-14) {
            cavity.push_back(nb);
            in_cavity.insert(nb);
            continue;
          }
        }
        if (nb < 0 || !in_cavity.count(nb)) walls.push_back({a, b, nb});
      }
    }
    // Re-scan: neighbors may have joined the cavity after their wall was
    // recorded; keep only walls whose outer side is still outside.
    std::vector<Wall> rim;
    for (const Wall& w : walls)
      if (w.outer < 0 || !in_cavity.count(w.outer)) rim.push_back(w);

    for (int t : cavity) tris[static_cast<std::size_t>(t)].alive = false;
    pts.push_back(p);
    const int pid = static_cast<int>(pts.size()) - 1;

    // Fan the rim. Rim edges (a -> b) keep the cavity on their left, so
    // (pid, a, b) is CCW, with the old outer triangle across edge (a, b).
    const int first_new = static_cast<int>(tris.size());
    for (const Wall& w : rim) {
      const int id = static_cast<int>(tris.size());
      tris.push_back({{pid, w.a, w.b}, {w.outer, -1, -1}, true});
      if (w.outer >= 0) {
        Tri& out = tris[static_cast<std::size_t>(w.outer)];
        for (int k = 0; k < 3; ++k) {
          const int ea = out.v[(k + 1) % 3], eb = out.v[(k + 2) % 3];
          if ((ea == w.a && eb == w.b) || (ea == w.b && eb == w.a))
            out.n[static_cast<std::size_t>(k)] = id;
        }
      }
      last_alive = id;
    }
    // Link the new triangles among themselves via their (pid, rim) edges.
    std::map<std::pair<int, int>, int> half;
    for (int i = first_new; i < static_cast<int>(tris.size()); ++i) {
      Tri& t = tris[static_cast<std::size_t>(i)];
      for (int k = 1; k < 3; ++k) {
        const int a = t.v[(k + 1) % 3], b = t.v[(k + 2) % 3];
        auto it = half.find({b, a});
        if (it != half.end()) {
          const int j = it->second;
          t.n[static_cast<std::size_t>(k)] = j;
          Tri& o = tris[static_cast<std::size_t>(j)];
          for (int m = 0; m < 3; ++m)
            if (o.v[(m + 1) % 3] == b && o.v[(m + 2) % 3] == a)
              o.n[static_cast<std::size_t>(m)] = i;
        } else {
          half[{a, b}] = i;
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Azimuthal equidistant chart about a center point.

struct Chart {
  Vec3 n, e1, e2;

  explicit Chart(const Vec3& center) : n(normalized(center)) {
    const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    e1 = normalized(cross(seed, n));
    e2 = cross(n, e1);
  }

  std::array<double, 2> to_chart(const Vec3& p) const {
    const double c = std::clamp(dot(n, p), -1.0, 1.0);
    const double rho = std::acos(c);
    if (rho < 1e-14) return {0.0, 0.0};
    const Vec3 t = normalized(p - n * c);
    return {rho * dot(t, e1), rho * dot(t, e2)};
  }

  Vec3 from_chart(const std::array<double, 2>& q) const {
    const double rho = std::hypot(q[0], q[1]);
    if (rho < 1e-14) return n;
    const Vec3 dir = (e1 * q[0] + e2 * q[1]) * (1.0 / rho);
    return n * std::cos(rho) + dir * std::sin(rho);
  }
};

struct BoundarySample {
  Vec3 pos;              // exact point on the region boundary
  SurfaceMesh::Tag tag;  // tag of the segment from this sample to the next
};

double hash_jitter(int i, int j) {
  std::uint64_t x = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(
                        static_cast<std::int64_t>(i) * 2654435761ll +
                        static_cast<std::int64_t>(j) * 40503ll + 12345);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  return (static_cast<double>(x >> 11) * 0x1.0p-53) - 0.5;
}

double dist_point_segment(const std::array<double, 2>& p,
                          const std::array<double, 2>& a,
                          const std::array<double, 2>& b) {
  const double vx = b[0] - a[0], vy = b[1] - a[1];
  const double wx = p[0] - a[0], wy = p[1] - a[1];
  const double vv = vx * vx + vy * vy;
  const double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
  return std::hypot(wx - t * vx, wy - t * vy);
}

bool inside_polyline(const std::vector<std::array<double, 2>>& loop,
                     const std::array<double, 2>& p) {
  bool in = false;
  for (std::size_t i = 0, j = loop.size() - 1; i < loop.size(); j = i++) {
    if ((loop[i][1] > p[1]) != (loop[j][1] > p[1])) {
      const double x = loop[j][0] + (loop[i][0] - loop[j][0]) *
                                        (p[1] - loop[j][1]) /
                                        (loop[i][1] - loop[j][1]);
      if (p[0] < x) in = !in;
    }
  }
  return in;
}

SurfaceMesh build_from_loop(const std::vector<BoundarySample>& loop,
                            const Chart& chart, double h) {
  const std::size_t nb = loop.size();
  std::vector<std::array<double, 2>> loop2d(nb);
  double radius = 0.0;
  for (std::size_t i = 0; i < nb; ++i) {
    loop2d[i] = chart.to_chart(loop[i].pos);
    radius = std::max(radius, std::hypot(loop2d[i][0], loop2d[i][1]));
  }
  radius = std::max(radius, 1e-3);

  // Interior lattice, clipped with a clearance band along the boundary.
  const double ell = 0.85 * h;
  const double row = ell * std::sqrt(3.0) / 2.0;
  std::vector<std::array<double, 2>> interior;
  const int jmax = static_cast<int>(radius / row) + 2;
  const int imax = static_cast<int>(radius / ell) + 2;
  for (int j = -jmax; j <= jmax; ++j) {
    for (int i = -imax; i <= imax; ++i) {
      std::array<double, 2> p{(i + (j & 1 ? 0.5 : 0.0)) * ell +
                                  0.02 * ell * hash_jitter(i, j),
                              j * row + 0.02 * ell * hash_jitter(j, -i - 7)};
      if (std::hypot(p[0], p[1]) > radius + ell) continue;
      if (!inside_polyline(loop2d, p)) continue;
      double clearance = 1e30;
      for (std::size_t k = 0; k < nb; ++k)
        clearance = std::min(
            clearance, dist_point_segment(p, loop2d[k], loop2d[(k + 1) % nb]));
      if (clearance < 0.55 * ell) continue;
      interior.push_back(p);
    }
  }

  Delaunay2D dt(0.0, 0.0, radius + ell);
  for (const auto& q : loop2d) dt.insert(q);
  for (const auto& q : interior) dt.insert(q);

  SurfaceMesh mesh;
  mesh.vertices.reserve(nb + interior.size());
  for (const auto& s : loop) mesh.vertices.push_back(UnitVec(s.pos));
  for (const auto& q : interior)
    mesh.vertices.push_back(UnitVec(chart.from_chart(q)));

  std::set<std::pair<int, int>> present_edges;
  for (const auto& t : dt.tris) {
    if (!t.alive) continue;
    if (t.v[0] < 3 || t.v[1] < 3 || t.v[2] < 3) continue;  // super vertices
    std::array<double, 2> c{0, 0};
    for (int k = 0; k < 3; ++k) {
      c[0] += dt.pts[static_cast<std::size_t>(t.v[k])][0] / 3.0;
      c[1] += dt.pts[static_cast<std::size_t>(t.v[k])][1] / 3.0;
    }
    if (!inside_polyline(loop2d, c)) continue;
    std::array<int, 3> tri{t.v[0] - 3, t.v[1] - 3, t.v[2] - 3};
    for (int k = 0; k < 3; ++k) {
      const int a = tri[static_cast<std::size_t>(k)];
      const int b = tri[static_cast<std::size_t>((k + 1) % 3)];
      present_edges.insert({std::min(a, b), std::max(a, b)});
    }
    mesh.triangles.push_back(tri);
  }

  // Conformity: each consecutive boundary pair must appear as a mesh edge.
  const int nbi = static_cast<int>(nb);
  for (int i = 0; i < nbi; ++i) {
    const int a = i, b = (i + 1) % nbi;
    if (!present_edges.count({std::min(a, b), std::max(a, b)}))
      throw MeshQualityFailure("boundary edge lost during triangulation");
    mesh.boundary.push_back({a, b, loop[static_cast<std::size_t>(i)].tag});
  }
  return mesh;
}

void orient_and_smooth(SurfaceMesh& mesh, int boundary_count, int passes) {
  for (auto& t : mesh.triangles) {
    const Vec3& p0 = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec3& p1 = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec3& p2 = mesh.vertices[static_cast<std::size_t>(t[2])];
    if (dot(cross(p1 - p0, p2 - p0), p0 + p1 + p2) < 0.0) std::swap(t[1], t[2]);
  }

  std::vector<std::set<int>> nbr(mesh.vertices.size());
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      nbr[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])].insert(
          t[static_cast<std::size_t>((k + 1) % 3)]);
      nbr[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])].insert(
          t[static_cast<std::size_t>((k + 2) % 3)]);
    }
  }
  for (int pass = 0; pass < passes; ++pass) {
    std::vector<UnitVec> next = mesh.vertices;
    for (std::size_t v = static_cast<std::size_t>(boundary_count);
         v < mesh.vertices.size(); ++v) {
      if (nbr[v].empty()) continue;
      Vec3 sum{};
      for (int w : nbr[v]) sum = sum + mesh.vertices[static_cast<std::size_t>(w)].vec();
      next[v] = UnitVec(normalized(sum));
    }
    mesh.vertices = std::move(next);
  }
}

void finalize_quality(SurfaceMesh& mesh) {
  double hmax = 0.0;
  double worst = 180.0;
  for (const auto& t : mesh.triangles) {
    const Vec3& p0 = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec3& p1 = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec3& p2 = mesh.vertices[static_cast<std::size_t>(t[2])];
    hmax = std::max({hmax, angle_between(p0, p1), angle_between(p1, p2),
                     angle_between(p2, p0)});
    const Vec3 e01 = p1 - p0, e12 = p2 - p1, e20 = p0 - p2;
    auto corner = [](const Vec3& u, const Vec3& v) {
      return angle_between(u, v) * 180.0 / kPi;
    };
    worst = std::min({worst, corner(e01, -e20), corner(e12, -e01),
                      corner(e20, -e12)});
  }
  mesh.h = hmax;
  mesh.min_angle = worst;
  if (worst < 15.0)
    throw MeshQualityFailure("triangle minimum angle below 15 degrees");
}

// Uniform samples along a sphere path, excluding the final point.
template <class F>
void sample_path(std::vector<BoundarySample>& out, F&& path, double length,
                 double spacing, SurfaceMesh::Tag tag) {
  const int n = std::max(1, static_cast<int>(std::ceil(length / spacing)));
  for (int i = 0; i < n; ++i)
    out.push_back({path(static_cast<double>(i) / n), tag});
}

}  // namespace

double region_boundary_distance(const ConvexRegion& w, const Vec3& p) {
  if (const auto* poly = std::get_if<SphericalPolygon>(&w))
    return distance_to_boundary(*poly, p);
  const auto& lune = std::get<Lune>(w);
  const double a = lune.a();
  double best = kPi;
  for (double az : {0.0, kPi * a}) {
    const Vec3 normal{0.0, -std::sin(az), std::cos(az)};
    const Vec3 q = p - normal * dot(normal, p);
    bool on_half = false;
    if (norm(q) > 1e-14) {
      const Vec3 qn = normalized(q);
      on_half = dot(qn, Vec3{0.0, std::cos(az), std::sin(az)}) >= 0.0;
    }
    double d;
    if (on_half)
      d = std::abs(std::asin(std::clamp(dot(normal, p), -1.0, 1.0)));
    else
      d = std::min(angle_between(p, Vec3{1, 0, 0}),
                   angle_between(p, Vec3{-1, 0, 0}));
    best = std::min(best, d);
  }
  return best;
}

bool on_region_boundary(const ConvexRegion& w, const Vec3& p, double tol) {
  return region_boundary_distance(w, p) <= tol;
}

double region_spec_area(const RegionSpec& spec) {
  if (const auto* cap = std::get_if<LatitudeCapSpec>(&spec)) {
    const double base = cap->lune.a() * kPi;
    return cap->complement ? base * (1.0 + std::sin(cap->b))
                           : base * (1.0 - std::sin(cap->b));
  }
  if (const auto* disc = std::get_if<GeodesicDiscSpec>(&spec))
    return 2.0 * kPi * (1.0 - std::cos(disc->radius));
  const auto& piece = std::get<PolygonPieceSpec>(spec);
  return polygon_area(SphericalPolygon(piece.piece));
}

double region_spec_ambient_area(const RegionSpec& spec) {
  if (const auto* cap = std::get_if<LatitudeCapSpec>(&spec))
    return cap->lune.area();
  if (const auto* disc = std::get_if<GeodesicDiscSpec>(&spec))
    return region_area(disc->w);
  return region_area(std::get<PolygonPieceSpec>(spec).w);
}

namespace {

SurfaceMesh::Tag tag_or(const TagOverrides& tags, const std::string& name,
                        SurfaceMesh::Tag fallback) {
  const auto it = tags.find(name);
  return it == tags.end() ? fallback : it->second;
}

SurfaceMesh mesh_latitude_cap(const Lune& lune, double b, double h,
                              const TagOverrides& tags) {
  if (!(b > -0.5 * kPi) || !(b < 0.5 * kPi))
    throw BadRegionSpec("latitude parameter b must be in (-pi/2, pi/2)");
  const double a = lune.a();
  std::vector<BoundarySample> loop;
  const double spacing = 0.5 * h;
  // Latitude arc v~: 0 -> a pi at u~ = b (interior of the cap on the left).
  sample_path(
      loop, [&](double t) { return lune.point(b, a * kPi * t); },
      a * kPi * std::cos(b), spacing,
      tag_or(tags, "latitude", SurfaceMesh::Tag::Dirichlet));
  // Meridian a pi up to the vertex, then meridian 0 back down.
  sample_path(
      loop,
      [&](double t) { return lune.point(b + t * (0.5 * kPi - b), a * kPi); },
      0.5 * kPi - b, spacing,
      tag_or(tags, "meridian1", SurfaceMesh::Tag::Neumann));
  sample_path(
      loop,
      [&](double t) { return lune.point(0.5 * kPi - t * (0.5 * kPi - b), 0.0); },
      0.5 * kPi - b, spacing,
      tag_or(tags, "meridian0", SurfaceMesh::Tag::Neumann));

  SurfaceMesh mesh = build_from_loop(loop, Chart(Vec3{1, 0, 0}), h);
  orient_and_smooth(mesh, static_cast<int>(loop.size()), 5);
  finalize_quality(mesh);
  return mesh;
}

}  // namespace

SurfaceMesh mesh_region(const RegionSpec& spec, double h) {
  if (!(h > 1e-3) || !(h < 0.3))
    throw BadRegionSpec("mesh size h must lie in (1e-3, 0.3)");

  if (const auto* cap = std::get_if<LatitudeCapSpec>(&spec)) {
    if (!cap->complement)
      return mesh_latitude_cap(cap->lune, cap->b, h, cap->tags);
    // The complementary piece is the mirror image of the cap at -b.
    SurfaceMesh mesh = mesh_latitude_cap(cap->lune, -cap->b, h, cap->tags);
    std::vector<UnitVec> flipped;
    flipped.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices)
      flipped.push_back(UnitVec(-v.x(), v.y(), v.z()));
    mesh.vertices = std::move(flipped);
    for (auto& t : mesh.triangles) std::swap(t[1], t[2]);
    return mesh;
  }

  if (const auto* disc = std::get_if<GeodesicDiscSpec>(&spec)) {
    if (!(disc->radius > 0.0) || disc->radius >= 0.5 * kPi)
      throw BadRegionSpec("disc radius must be in (0, pi/2)");
    if (region_boundary_distance(disc->w, disc->center) <= disc->radius ||
        !region_contains(disc->w, disc->center, 1e-12))
      throw BadRegionSpec("geodesic disc is not contained in W");
    const Chart chart(disc->center);
    std::vector<BoundarySample> loop;
    const double circ = 2.0 * kPi * std::sin(disc->radius);
    const double r = disc->radius;
    sample_path(
        loop,
        [&](double t) {
          return chart.from_chart(
              {r * std::cos(2.0 * kPi * t), r * std::sin(2.0 * kPi * t)});
        },
        circ, 0.5 * h,
        tag_or(disc->tags, "circle", SurfaceMesh::Tag::Dirichlet));
    SurfaceMesh mesh = build_from_loop(loop, chart, h);
    orient_and_smooth(mesh, static_cast<int>(loop.size()), 5);
    finalize_quality(mesh);
    return mesh;
  }

  const auto& piece_spec = std::get<PolygonPieceSpec>(spec);
  SphericalPolygon piece(piece_spec.piece);
  if (!is_convex(piece)) throw BadRegionSpec("piece polygon is not convex");
  Vec3 centroid{};
  for (const auto& v : piece.vertices()) centroid = centroid + v.vec();
  centroid = normalized(centroid);
  for (const auto& v : piece.vertices())
    if (!region_contains(piece_spec.w, v, 1e-9))
      throw BadRegionSpec("piece is not contained in W");

  std::vector<BoundarySample> loop;
  for (int e = 0; e < piece.size(); ++e) {
    const Vec3 p0 = piece.vertex(e);
    const Vec3 p1 = piece.vertex(e + 1);
    const Vec3 mid = slerp(p0, p1, 0.5);
    const bool neumann = on_region_boundary(piece_spec.w, p0, 1e-9) &&
                         on_region_boundary(piece_spec.w, p1, 1e-9) &&
                         on_region_boundary(piece_spec.w, mid, 1e-9);
    sample_path(
        loop, [&](double t) { return slerp(p0, p1, t); },
        angle_between(p0, p1), 0.5 * h,
        tag_or(piece_spec.tags, "edge" + std::to_string(e),
               neumann ? SurfaceMesh::Tag::Neumann
                       : SurfaceMesh::Tag::Dirichlet));
  }
  SurfaceMesh mesh = build_from_loop(loop, Chart(centroid), h);
  orient_and_smooth(mesh, static_cast<int>(loop.size()), 5);
  finalize_quality(mesh);
  return mesh;
}

SurfaceMesh icosphere(int subdivisions) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : verts) v = normalized(v);
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      verts.push_back(normalized(verts[static_cast<std::size_t>(a)] +
                                 verts[static_cast<std::size_t>(b)]));
      const int id = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  SurfaceMesh mesh;
  mesh.vertices.reserve(verts.size());
  for (const auto& v : verts) mesh.vertices.push_back(UnitVec(v));
  mesh.triangles = std::move(faces);
  orient_and_smooth(mesh, static_cast<int>(mesh.vertices.size()), 0);
  finalize_quality(mesh);
  return mesh;
}

}  // namespace spindle
