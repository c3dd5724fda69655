#include "spindle/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace spindle {

std::string fmt_json(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_csv(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

ConvexRegion parse_convex_region(const nlohmann::json& j) {
  if (j.contains("lune")) return Lune(j.at("lune").at("a").get<double>());
  std::vector<UnitVec> verts;
  for (const auto& v : j.at("vertices"))
    verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>(),
                       v.at(2).get<double>());
  return SphericalPolygon(std::move(verts));
}

ParamCurve parse_curve(const nlohmann::json& j) {
  std::vector<std::array<double, 2>> samples;
  for (const auto& s : j.at("samples"))
    samples.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
  if (samples.size() < 3) throw Error("curve needs at least 3 samples");
  const bool closed = j.value("closed", true);

  // Lift v to a continuous branch; a closed curve may wind, so the closing
  // jump is a multiple of 2 pi carried by the wrap-around neighbors.
  for (std::size_t i = 1; i < samples.size(); ++i) {
    double dv = samples[i][1] - samples[i - 1][1];
    dv -= 2.0 * kPi * std::round(dv / (2.0 * kPi));
    samples[i][1] = samples[i - 1][1] + dv;
  }
  double closing = 0.0;
  if (closed) {
    double dv = samples.front()[1] - samples.back()[1];
    dv -= 2.0 * kPi * std::round(dv / (2.0 * kPi));
    closing = samples.back()[1] + dv - samples.front()[1];
  }

  const int n = static_cast<int>(samples.size());
  auto point = [samples, closed, closing, n](int i) -> std::array<double, 2> {
    if (closed) {
      const int wraps = static_cast<int>(std::floor(static_cast<double>(i) / n));
      const int k = i - wraps * n;
      return {samples[static_cast<std::size_t>(k)][0],
              samples[static_cast<std::size_t>(k)][1] + wraps * closing};
    }
    const int k = std::clamp(i, 0, n - 1);
    return samples[static_cast<std::size_t>(k)];
  };
  const int segs = closed ? n : n - 1;

  ParamCurve c;
  c.closed = closed;
  c.pos = [point, segs](double t) -> std::array<double, 2> {
    t = std::clamp(t, 0.0, 1.0) * segs;
    int i = std::min(static_cast<int>(t), segs - 1);
    const double s = t - i;
    const auto p0 = point(i - 1), p1 = point(i), p2 = point(i + 1),
               p3 = point(i + 2);
    std::array<double, 2> out{};
    for (int d = 0; d < 2; ++d) {
      // Catmull-Rom basis.
      out[static_cast<std::size_t>(d)] =
          0.5 * (2.0 * p1[static_cast<std::size_t>(d)] +
                 (-p0[static_cast<std::size_t>(d)] + p2[static_cast<std::size_t>(d)]) * s +
                 (2.0 * p0[static_cast<std::size_t>(d)] - 5.0 * p1[static_cast<std::size_t>(d)] +
                  4.0 * p2[static_cast<std::size_t>(d)] - p3[static_cast<std::size_t>(d)]) *
                     s * s +
                 (-p0[static_cast<std::size_t>(d)] + 3.0 * p1[static_cast<std::size_t>(d)] -
                  3.0 * p2[static_cast<std::size_t>(d)] + p3[static_cast<std::size_t>(d)]) *
                     s * s * s);
    }
    return out;
  };
  c.vel = [point, segs](double t) -> std::array<double, 2> {
    t = std::clamp(t, 0.0, 1.0) * segs;
    int i = std::min(static_cast<int>(t), segs - 1);
    const double s = t - i;
    const auto p0 = point(i - 1), p1 = point(i), p2 = point(i + 1),
               p3 = point(i + 2);
    std::array<double, 2> out{};
    for (int d = 0; d < 2; ++d) {
      out[static_cast<std::size_t>(d)] =
          0.5 *
          ((-p0[static_cast<std::size_t>(d)] + p2[static_cast<std::size_t>(d)]) +
           2.0 * (2.0 * p0[static_cast<std::size_t>(d)] - 5.0 * p1[static_cast<std::size_t>(d)] +
                  4.0 * p2[static_cast<std::size_t>(d)] - p3[static_cast<std::size_t>(d)]) *
               s +
           3.0 * (-p0[static_cast<std::size_t>(d)] + 3.0 * p1[static_cast<std::size_t>(d)] -
                  3.0 * p2[static_cast<std::size_t>(d)] + p3[static_cast<std::size_t>(d)]) *
               s * s) *
          segs;
    }
    return out;
  };
  return c;
}

namespace {

TagOverrides parse_tags(const nlohmann::json& j) {
  TagOverrides tags;
  if (j.contains("dirichlet"))
    for (const auto& name : j.at("dirichlet"))
      tags[name.get<std::string>()] = SurfaceMesh::Tag::Dirichlet;
  if (j.contains("neumann"))
    for (const auto& name : j.at("neumann"))
      tags[name.get<std::string>()] = SurfaceMesh::Tag::Neumann;
  return tags;
}

}  // namespace

RegionSpec parse_region_spec(const nlohmann::json& j) {
  const ConvexRegion w = parse_convex_region(j.at("W"));
  const auto& v = j.at("V");
  const std::string kind = v.at("kind").get<std::string>();
  const TagOverrides tags = parse_tags(j);
  if (kind == "latitude-cap") {
    const auto* lune = std::get_if<Lune>(&w);
    if (!lune) throw BadRegionSpec("latitude-cap needs a lune W");
    return LatitudeCapSpec{*lune, v.at("b").get<double>(),
                           v.value("complement", false), tags};
  }
  if (kind == "geodesic-disc") {
    const auto& c = v.at("center");
    return GeodesicDiscSpec{
        w,
        UnitVec(c.at(0).get<double>(), c.at(1).get<double>(),
                c.at(2).get<double>()),
        v.at("radius").get<double>(), tags};
  }
  if (kind == "polyline") {
    std::vector<UnitVec> verts;
    for (const auto& p : v.at("vertices"))
      verts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(),
                         p.at(2).get<double>());
    return PolygonPieceSpec{w, std::move(verts), tags};
  }
  throw BadRegionSpec("unknown region kind: " + kind);
}

void dump_mesh_off(const SurfaceMesh& mesh, std::ostream& out) {
  out << "OFF\n"
      << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  for (const auto& v : mesh.vertices)
    out << fmt_json(v.x()) << ' ' << fmt_json(v.y()) << ' ' << fmt_json(v.z())
        << '\n';
  for (const auto& t : mesh.triangles)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  out << "BOUNDARY " << mesh.boundary.size() << '\n';
  for (const auto& e : mesh.boundary)
    out << e.v0 << ' ' << e.v1 << ' '
        << (e.tag == SurfaceMesh::Tag::Dirichlet ? 'D' : 'N') << '\n';
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "perturbed-caps") return FamilyKind::PerturbedCaps;
  if (name == "off-center-circles") return FamilyKind::OffCenterCircles;
  if (name == "star-shaped") return FamilyKind::StarShaped;
  if (name == "multi-component") return FamilyKind::MultiComponent;
  throw Error("unknown curve family: " + name);
}

PolygonFamilyKind parse_polygon_family_kind(const std::string& name) {
  if (name == "interior-discs") return PolygonFamilyKind::InteriorDiscs;
  if (name == "vertex-caps") return PolygonFamilyKind::VertexCaps;
  if (name == "doubled-chords") return PolygonFamilyKind::DoubledChords;
  if (name == "multi-component") return PolygonFamilyKind::MultiComponent;
  throw Error("unknown polygon curve family: " + name);
}

}  // namespace spindle
