// Command-line front end: every module command behind one binary.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spindle/fem.hpp"
#include "spindle/io.hpp"
#include "spindle/isoperimetry.hpp"
#include "spindle/smoothing.hpp"
#include "spindle/spectral.hpp"
#include "spindle/verify.hpp"

namespace {

using namespace spindle;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error("cannot open output file " + path);
  return file;
}

std::string default_config_path() {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path exe = fs::canonical("/proc/self/exe", ec);
  if (!ec) {
    const fs::path beside = exe.parent_path().parent_path() / "config" /
                            "suites.json";
    if (fs::exists(beside)) return beside.string();
  }
  if (fs::exists("config/suites.json")) return "config/suites.json";
  throw Error("suite config not found; pass --config");
}

int run_cap_eigen(double b, double tol, const std::string& format,
                  const std::string& out_path) {
  const EigenResult r = cap_eigenvalue(b, tol);
  const double alpha = char_exponent(r.value);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  if (format == "json") {
    out << "{\"b\": " << fmt_json(b) << ", \"lambda\": " << fmt_json(r.value)
        << ", \"alpha\": " << fmt_json(alpha)
        << ", \"method\": \"shooting\", \"h\": " << fmt_json(r.discretization)
        << ", \"error_estimate\": " << fmt_json(r.error_estimate) << "}\n";
  } else {
    out << "quantity,value,tolerance\n";
    out << "lambda," << fmt_csv(r.value) << ',' << fmt_csv(r.error_estimate)
        << '\n';
    out << "alpha," << fmt_csv(alpha) << ','
        << fmt_csv(r.error_estimate / (2.0 * alpha + 1.0)) << '\n';
  }
  return 0;
}

int run_bkp_table(double bmin, double bmax, int n, double tol,
                  const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << "b,lambda,alpha,bkp_sum\n";
  for (int i = 0; i < n; ++i) {
    const double b = n == 1 ? bmin : bmin + (bmax - bmin) * i / (n - 1);
    const double lam = cap_eigenvalue(b, tol).value;
    const double alpha = char_exponent(lam);
    const double sum = alpha + char_exponent(cap_eigenvalue(-b, tol).value);
    out << fmt_csv(b) << ',' << fmt_csv(lam) << ',' << fmt_csv(alpha) << ','
        << fmt_csv(sum) << '\n';
  }
  return 0;
}

int run_iso_verify(const std::vector<std::string>& surface,
                   const std::string& family, int n, std::uint64_t seed,
                   const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << "curve,L,A,margin,relative_margin\n";
  bool all_pass = true;
  if (surface.at(0) == "spindle") {
    SpindleFamilyConfig cfg{SpindleParam(std::stod(surface.at(1))),
                            parse_family_kind(family), n, seed};
    const auto members = generate_spindle_family(cfg);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const IsoCheckResult r = check_curve(cfg.a, members[i]);
      all_pass = all_pass && r.pass;
      out << i << ',' << fmt_csv(r.length) << ',' << fmt_csv(r.area) << ','
          << fmt_csv(r.margin) << ',' << fmt_csv(r.relative_margin) << '\n';
    }
  } else if (surface.at(0) == "polygon") {
    const auto region = parse_convex_region(load_json_file(surface.at(1)));
    const auto* poly = std::get_if<SphericalPolygon>(&region);
    if (!poly) throw Error("iso-verify polygon surface needs vertices");
    const DoubledPolygon dp(*poly);
    PolygonFamilyConfig cfg{parse_polygon_family_kind(family), n, seed};
    const auto members = generate_polygon_family(dp, cfg);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const IsoCheckResult r = check_curve(dp, members[i]);
      all_pass = all_pass && r.pass;
      out << i << ',' << fmt_csv(r.length) << ',' << fmt_csv(r.area) << ','
          << fmt_csv(r.margin) << ',' << fmt_csv(r.relative_margin) << '\n';
    }
  } else {
    throw CLI::ValidationError("--surface must be 'spindle <a>' or 'polygon <file>'");
  }
  return all_pass ? 0 : 1;
}

int run_smooth(double a, double eps, const std::string& out_path) {
  const SpindleParam param(a);
  const SmoothedTipProfile s = smoothing_coeffs(param, eps);
  const SignReport sr = sign_conditions(s);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << "{\n  \"a\": " << fmt_json(a) << ",\n  \"eps\": " << fmt_json(eps)
      << ",\n  \"b0\": " << fmt_json(s.b0) << ",\n  \"b1\": " << fmt_json(s.b1)
      << ",\n  \"b2\": " << fmt_json(s.b2) << ",\n  \"match_residuals\": ["
      << fmt_json(std::abs(s.w(eps) - tip_profile_w(param, eps))) << ", "
      << fmt_json(std::abs(s.w1(eps) - tip_profile_w1(param, eps))) << ", "
      << fmt_json(std::abs(s.w2(eps) - tip_profile_w2(param, eps)))
      << "],\n  \"sign_conditions\": " << (sr.ok ? "true" : "false")
      << ",\n  \"curvature_at_0\": " << fmt_json(s.curvature(0.0))
      << ",\n  \"curvature_at_eps\": " << fmt_json(s.curvature(eps))
      << ",\n  \"tip_curvature_mass\": " << fmt_json(tip_curvature_mass(s))
      << ",\n  \"total_curvature\": "
      << fmt_json(total_curvature_smoothed(param, eps))
      << ",\n  \"area\": " << fmt_json(smoothed_area(param, eps))
      << ",\n  \"curvature_grid\": [";
  for (int i = 0; i <= 32; ++i) {
    const double u = eps * i / 32.0;
    out << (i ? ", " : "") << '[' << fmt_json(u) << ", "
        << fmt_json(s.curvature(u)) << ']';
  }
  out << "]\n}\n";
  return 0;
}

int run_dn_eigen(const std::string& region_path, double h, double tol,
                 const std::string& out_path, const std::string& mesh_path) {
  const RegionSpec spec = parse_region_spec(load_json_file(region_path));
  const EigenResult mu = dn_eigenvalue(spec, h, tol);
  const double area_v = region_spec_area(spec);
  const double area_w = region_spec_ambient_area(spec);
  const double a = area_w / (2.0 * kPi);
  const double b = std::asin(1.0 - area_v / (a * kPi));
  const double bound = cap_eigenvalue(b, tol).value;
  if (!mesh_path.empty()) {
    std::ofstream mesh_file(mesh_path);
    dump_mesh_off(mesh_region(spec, h), mesh_file);
  }
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << "{\"mu\": " << fmt_json(mu.value) << ", \"method\": \"fem\", \"h\": "
      << fmt_json(mu.discretization)
      << ", \"error_estimate\": " << fmt_json(mu.error_estimate)
      << ", \"area\": " << fmt_json(area_v)
      << ", \"b\": " << fmt_json(b)
      << ", \"lower_bound_lambda\": " << fmt_json(bound)
      << ", \"bound_satisfied\": "
      << (mu.value >= bound - 5.0 * h * h ? "true" : "false") << "}\n";
  return 0;
}

int run_spindle_info(double a, double b, bool has_b,
                     const std::string& curve_path,
                     const std::string& out_path) {
  const SpindleParam param(a);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << "quantity,value,tolerance\n";
  out << "surface_area," << fmt_csv(4.0 * kPi * a) << ",0\n";
  out << "tip_coordinate," << fmt_csv(tip_coordinate(param)) << ",1e-12\n";
  if (has_b) {
    const Cap cap(param, b);
    out << "cap_area," << fmt_csv(cap_area(cap)) << ",0\n";
    out << "cap_perimeter," << fmt_csv(cap_perimeter(cap)) << ",0\n";
    out << "iso_profile," << fmt_csv(iso_profile(param, cap_area(cap)))
        << ",0\n";
  }
  if (!curve_path.empty()) {
    const ParamCurve curve = parse_curve(load_json_file(curve_path));
    const double len = curve_length(param, curve);
    out << "curve_length," << fmt_csv(len) << ','
        << fmt_csv(1e-9 * (1.0 + len)) << '\n';
    const double area = enclosed_area(param, curve);
    out << "enclosed_area," << fmt_csv(area) << ",1e-9\n";
    out << "margin,"
        << fmt_csv(len * len - area * (4.0 * kPi * a - area)) << ",1e-6\n";
  }
  return 0;
}

int run_verify(const std::string& which, std::uint64_t seed,
               std::string config_path, const std::string& out_path,
               const std::string& format) {
  if (config_path.empty()) config_path = default_config_path();
  const SuiteConfig cfg = load_suite_config(config_path);
  Report report;
  if (which == "all")
    report = run_all_suites(cfg, seed);
  else if (which == "iso")
    report = run_theorem_iso_suite(cfg, seed);
  else if (which == "faber-krahn")
    report = run_faber_krahn_suite(cfg, seed);
  else if (which == "lemma")
    report = run_lemma_suite(cfg, seed);
  else
    throw CLI::ValidationError("unknown suite: " + which);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  if (format == "csv")
    write_report_csv(report, out);
  else
    write_report_json(report, out);
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-curvature spindle surfaces: isoperimetric profile "
               "and cap eigenvalue toolkit"};
  // `dn-eigen --h` is part of the interface, so help is --help only.
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  std::string out_path, format = "csv", config_path, mesh_path, family;
  std::uint64_t seed = 7;
  double tol = 1e-9;

  auto* cap = app.add_subcommand("cap-eigen", "first Dirichlet eigenvalue of the cap u >= b");
  double cap_b = 0.0;
  cap->add_option("--b", cap_b, "cap latitude")->required();
  cap->add_option("--tol", tol, "eigenvalue tolerance");
  cap->add_option("--out", out_path, "output file (default stdout)");
  cap->add_option("--format", format, "csv or json");

  auto* bkp = app.add_subcommand("bkp-table", "characteristic exponent sums over a latitude grid");
  double bmin = -1.5, bmax = 1.5;
  int bkp_n = 100;
  bkp->add_option("--bmin", bmin);
  bkp->add_option("--bmax", bmax);
  bkp->add_option("--n", bkp_n);
  bkp->add_option("--tol", tol);
  bkp->add_option("--out", out_path);

  auto* iso = app.add_subcommand("iso-verify", "randomized isoperimetric margins");
  std::vector<std::string> surface;
  int iso_n = 200;
  iso->add_option("--surface", surface, "spindle <a> | polygon <file>")
      ->expected(2)->required();
  iso->add_option("--family", family, "curve family kind")->required();
  iso->add_option("--n", iso_n, "curves to generate");
  iso->add_option("--seed", seed);
  iso->add_option("--out", out_path);

  auto* smooth = app.add_subcommand("smooth", "tip smoothing coefficients and curvature checks");
  double smooth_a = 0.5, smooth_eps = 1e-2;
  smooth->add_option("--a", smooth_a)->required();
  smooth->add_option("--eps", smooth_eps)->required();
  std::string report_fmt = "json";
  smooth->add_option("--report", report_fmt, "json");
  smooth->add_option("--out", out_path);

  auto* dn = app.add_subcommand("dn-eigen", "mixed Dirichlet-Neumann eigenvalue of a region");
  std::string region_path;
  double dn_h = 0.05;
  dn->add_option("--region", region_path, "region JSON file")->required();
  dn->add_option("--h", dn_h, "target mesh size");
  dn->add_option("--tol", tol, "solver tolerance");
  dn->add_option("--out", out_path);
  dn->add_option("--mesh-out", mesh_path, "dump the mesh (OFF + boundary tags)");

  auto* info = app.add_subcommand("spindle-info", "closed-form cap quantities and curve checks");
  double info_a = 0.5, info_b = 0.0;
  std::string curve_path;
  info->add_option("--a", info_a)->required();
  auto* bopt = info->add_option("--b", info_b, "cap latitude");
  info->add_option("--curve", curve_path, "curve JSON file");
  info->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::string which = "all";
  verify->add_option("suite", which, "all | iso | faber-krahn | lemma");
  verify->add_option("--seed", seed);
  verify->add_option("--config", config_path, "suite grid config");
  verify->add_option("--out", out_path);
  verify->add_option("--format", format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cap->parsed()) return run_cap_eigen(cap_b, tol, format, out_path);
    if (bkp->parsed()) return run_bkp_table(bmin, bmax, bkp_n, tol, out_path);
    if (iso->parsed())
      return run_iso_verify(surface, family, iso_n, seed, out_path);
    if (smooth->parsed()) return run_smooth(smooth_a, smooth_eps, out_path);
    if (dn->parsed())
      return run_dn_eigen(region_path, dn_h, tol, out_path, mesh_path);
    if (info->parsed())
      return run_spindle_info(info_a, info_b, bopt->count() > 0, curve_path,
                              out_path);
    if (verify->parsed())
      return run_verify(which, seed, config_path, out_path, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
