#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spindle/fem.hpp"
#include "spindle/isoperimetry.hpp"
#include "spindle/mesh.hpp"

namespace spindle {

// Numeric rendering: 17 significant digits in JSON, 12 in CSV, always with
// '.' as the decimal point.
std::string fmt_json(double x);
std::string fmt_csv(double x);

nlohmann::json load_json_file(const std::string& path);

// { "vertices": [[x,y,z], ...] }  or  { "lune": { "a": number } }
ConvexRegion parse_convex_region(const nlohmann::json& j);

// { "samples": [[u,v], ...], "closed": true } with periodic Catmull-Rom
// interpolation through the samples.
ParamCurve parse_curve(const nlohmann::json& j);

// { "W": <region>, "V": { "kind": "latitude-cap"|"geodesic-disc"|"polyline",
//   ... }, "dirichlet": [names], "neumann": [names] }
RegionSpec parse_region_spec(const nlohmann::json& j);

// ASCII OFF plus a BOUNDARY block listing tagged boundary edges.
void dump_mesh_off(const SurfaceMesh& mesh, std::ostream& out);

FamilyKind parse_family_kind(const std::string& name);
PolygonFamilyKind parse_polygon_family_kind(const std::string& name);

}  // namespace spindle
