#include "spindle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "spindle/fem.hpp"
#include "spindle/io.hpp"
#include "spindle/isoperimetry.hpp"
#include "spindle/smoothing.hpp"
#include "spindle/spectral.hpp"

namespace spindle {

namespace {

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const nlohmann::json& section, std::uint64_t seed) {
  return "fnv1a:" + fnv1a(section.dump() + ":" + std::to_string(seed));
}

SphericalPolygon polygon_from_json(const nlohmann::json& j) {
  std::vector<UnitVec> verts;
  for (const auto& v : j.at("vertices"))
    verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>(),
                       v.at(2).get<double>());
  return SphericalPolygon(std::move(verts));
}

ClaimResult::Verdict verdict_of(bool ok) {
  return ok ? ClaimResult::Verdict::pass : ClaimResult::Verdict::fail;
}

}  // namespace

int Report::failures() const {
  int n = 0;
  for (const auto& c : claims)
    if (c.verdict == ClaimResult::Verdict::fail) ++n;
  return n;
}

SuiteConfig load_suite_config(const std::string& path) {
  return SuiteConfig{load_json_file(path)};
}

// ---------------------------------------------------------------------------
// Isoperimetric inequality suite.

Report run_theorem_iso_suite(const SuiteConfig& cfg, std::uint64_t seed) {
  Report report;
  report.suite = "iso";
  report.seed = seed;
  report.config_version = cfg.version();
  const auto& iso = cfg.data.at("iso");
  const int per_family = iso.at("curves_per_family").get<int>();
  const std::string dig = digest(iso, seed);

  int total_curves = 0;
  bool equality_clean = true;
  double max_witness_margin = 0.0;   // |margin| of intended equality cases
  double min_other_margin = 1e300;   // margin of everything else, scaled

  int spindle_idx = 0;
  for (const auto& aj : iso.at("spindle_a")) {
    const double a = aj.get<double>();
    const SpindleParam param(a);
    const double scale = std::pow(4.0 * kPi * a, 2);
    double min_margin = 1e300;
    int curves = 0;
    for (FamilyKind kind :
         {FamilyKind::PerturbedCaps, FamilyKind::OffCenterCircles,
          FamilyKind::StarShaped, FamilyKind::MultiComponent}) {
      SpindleFamilyConfig fam{param, kind, per_family,
                              seed * 1000003ull +
                                  static_cast<std::uint64_t>(spindle_idx) * 101ull +
                                  static_cast<std::uint64_t>(kind)};
      const auto members = generate_spindle_family(fam);
      for (std::size_t i = 0; i < members.size(); ++i) {
        const IsoCheckResult r = check_curve(param, members[i]);
        ++curves;
        min_margin = std::min(min_margin, r.margin);
        const bool witness = kind == FamilyKind::PerturbedCaps && i == 0;
        if (witness) {
          max_witness_margin = std::max(max_witness_margin, std::abs(r.margin));
          if (!r.equality) equality_clean = false;
        } else {
          min_other_margin = std::min(min_other_margin, r.margin / scale);
          if (r.equality) equality_clean = false;
        }
      }
    }
    total_curves += curves;
    ClaimResult c;
    c.id = "iso.spindle.margin.a" + std::to_string(spindle_idx);
    c.statement =
        "L^2 - A (4 pi a - A) >= -1e-6 (4 pi a)^2 for every generated "
        "boundary on the spindle surface";
    c.inputs_digest = dig;
    c.tolerance = 1e-6 * scale;
    c.values = {{"a", a},
                {"curves", static_cast<double>(curves)},
                {"min_margin", min_margin}};
    c.verdict = verdict_of(min_margin >= -1e-6 * scale);
    report.append(std::move(c));
    ++spindle_idx;
  }

  {
    ClaimResult c;
    c.id = "iso.spindle.equality";
    c.statement =
        "|margin| <= 1e-8 (4 pi a)^2 exactly for the latitude circles and "
        "for nothing else";
    c.inputs_digest = dig;
    c.tolerance = 1e-8;
    c.values = {{"total_curves", static_cast<double>(total_curves)},
                {"max_witness_margin", max_witness_margin},
                {"min_other_scaled_margin", min_other_margin}};
    c.verdict = verdict_of(equality_clean);
    report.append(std::move(c));
  }

  // Doubled polygons: strict inequality everywhere; smallest relative
  // margin reported against delta(P).
  const int per_poly = iso.at("polygon_curves_per_family").get<int>();
  std::vector<std::pair<double, double>> delta_vs_margin;
  int poly_idx = 0;
  for (const auto& pj : iso.at("polygons")) {
    const DoubledPolygon dp(polygon_from_json(pj));
    const double scale = std::pow(4.0 * kPi * dp.a(), 2);
    double min_margin = 1e300, min_rel = 1e300;
    int curves = 0;
    for (PolygonFamilyKind kind :
         {PolygonFamilyKind::InteriorDiscs, PolygonFamilyKind::VertexCaps,
          PolygonFamilyKind::DoubledChords,
          PolygonFamilyKind::MultiComponent}) {
      PolygonFamilyConfig fam;
      fam.kind = kind;
      fam.count = per_poly;
      fam.seed = seed * 7777777ull + static_cast<std::uint64_t>(poly_idx) * 13ull +
                 static_cast<std::uint64_t>(kind);
      for (const auto& loops : generate_polygon_family(dp, fam)) {
        const IsoCheckResult r = check_curve(dp, loops);
        ++curves;
        min_margin = std::min(min_margin, r.margin);
        min_rel = std::min(min_rel, r.relative_margin);
      }
    }
    total_curves += curves;
    delta_vs_margin.emplace_back(dp.delta(), min_rel);
    ClaimResult c;
    c.id = "iso.polygon.margin." + pj.value("name", std::to_string(poly_idx));
    c.statement =
        "L^2 > A (4 pi a - A), strictly, for every generated boundary on "
        "the doubled polygon";
    c.inputs_digest = dig;
    c.tolerance = 1e-8 * scale;
    c.values = {{"a", dp.a()},
                {"delta", dp.delta()},
                {"curves", static_cast<double>(curves)},
                {"min_margin", min_margin},
                {"min_relative_margin", min_rel}};
    c.verdict = verdict_of(min_margin > 1e-8 * scale);
    report.append(std::move(c));
    ++poly_idx;
  }

  {
    std::sort(delta_vs_margin.begin(), delta_vs_margin.end());
    ClaimResult c;
    c.id = "iso.polygon.delta-trend";
    c.statement =
        "smallest relative margin per doubled polygon, ordered by the angle "
        "gap delta (empirical, no closed form asserted)";
    c.inputs_digest = dig;
    c.tolerance = 0.0;
    for (std::size_t i = 0; i < delta_vs_margin.size(); ++i) {
      c.values.emplace_back("delta_" + std::to_string(i),
                            delta_vs_margin[i].first);
      c.values.emplace_back("min_rel_margin_" + std::to_string(i),
                            delta_vs_margin[i].second);
    }
    c.values.emplace_back("total_curves", static_cast<double>(total_curves));
    c.verdict = ClaimResult::Verdict::informational;
    report.append(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Faber-Krahn / eigenvalue suite.

Report run_faber_krahn_suite(const SuiteConfig& cfg, std::uint64_t seed) {
  Report report;
  report.suite = "faber-krahn";
  report.seed = seed;
  report.config_version = cfg.version();
  const auto& fk = cfg.data.at("faber_krahn");
  const double h = fk.at("h").get<double>();
  const double tol = fk.at("tol").get<double>();
  const double slack = fk.at("slack_factor").get<double>() * h * h;
  const std::string dig = digest(fk, seed);

  for (const auto& entry : fk.at("regions")) {
    const RegionSpec spec = parse_region_spec(entry.at("region"));
    const double area_v = region_spec_area(spec);
    const double area_w = region_spec_ambient_area(spec);
    const double a = area_w / (2.0 * kPi);
    const double b = std::asin(1.0 - area_v / (a * kPi));
    const double bound = cap_eigenvalue(b, tol).value;
    const EigenResult mu = dn_eigenvalue(spec, h, tol);
    const bool equality = entry.value("equality", false);

    ClaimResult c;
    c.id = "fk.bound." + entry.at("name").get<std::string>();
    c.statement =
        "mu_h(V) >= lambda(U_{1,b}) - 5 h^2 for the cap of the same area";
    c.inputs_digest = dig;
    c.tolerance = slack;
    c.values = {{"area_V", area_v}, {"b", b},           {"bound", bound},
                {"mu", mu.value},   {"h", h},           {"margin", mu.value - bound},
                {"mu_error_estimate", mu.error_estimate}};
    c.verdict = verdict_of(mu.value >= bound - slack);
    report.append(std::move(c));

    if (equality) {
      ClaimResult e;
      e.id = "fk.equality." + entry.at("name").get<std::string>();
      e.statement =
          "|mu_h(V) - lambda(U_{1,b})| <= 5 h^2 for lune latitude caps";
      e.inputs_digest = dig;
      e.tolerance = slack;
      e.values = {{"bound", bound},
                  {"mu", mu.value},
                  {"difference", std::abs(mu.value - bound)}};
      e.verdict = verdict_of(std::abs(mu.value - bound) <= slack);
      report.append(std::move(e));
    }
  }

  for (const auto& entry : fk.at("order_study")) {
    const RegionSpec spec = parse_region_spec(entry.at("region"));
    std::vector<double> hs;
    for (const auto& hv : entry.at("h")) hs.push_back(hv.get<double>());
    std::vector<double> mus;
    for (double hv : hs)
      mus.push_back(smallest_eigenvalue(assemble(mesh_region(spec, hv)), tol).value);
    const double d1 = std::abs(mus[0] - mus[1]);
    const double d2 = std::abs(mus[1] - mus[2]);
    const double order = std::log2(d1 / d2);
    ClaimResult c;
    c.id = "fk.order." + entry.at("name").get<std::string>();
    c.statement = "observed eigenvalue convergence order lies in [1.5, 2.5]";
    c.inputs_digest = dig;
    c.tolerance = 0.5;
    c.values = {{"mu_h0", mus[0]}, {"mu_h1", mus[1]}, {"mu_h2", mus[2]},
                {"order", order}};
    c.verdict = verdict_of(order >= 1.5 && order <= 2.5);
    report.append(std::move(c));
  }

  const double fh_min = fk.at("fh_min").get<double>();
  for (const auto& entry : fk.at("partitions")) {
    const RegionSpec v_spec = parse_region_spec(entry.at("V"));
    const RegionSpec c_spec = parse_region_spec(entry.at("complement"));
    const double mu_v = dn_eigenvalue(v_spec, h, tol).value;
    const double mu_c = dn_eigenvalue(c_spec, h, tol).value;
    const double sum = char_exponent(mu_v) + char_exponent(mu_c);
    const bool equality = entry.value("equality", false);
    ClaimResult c;
    c.id = "fk.partition." + entry.at("name").get<std::string>();
    c.statement = "alpha(V) + alpha(W minus V) >= 2 - 1e-3";
    c.inputs_digest = dig;
    c.tolerance = fh_min;
    c.values = {{"mu_V", mu_v},
                {"mu_complement", mu_c},
                {"alpha_sum", sum}};
    c.verdict = verdict_of(sum >= 2.0 - fh_min);
    report.append(std::move(c));
    if (equality) {
      ClaimResult e;
      e.id = "fk.partition-equality." + entry.at("name").get<std::string>();
      e.statement = "alpha sum equals 2 within 5 h^2 for the half-lune split";
      e.inputs_digest = dig;
      e.tolerance = slack;
      e.values = {{"alpha_sum", sum}, {"difference", std::abs(sum - 2.0)}};
      e.verdict = verdict_of(std::abs(sum - 2.0) <= slack);
      report.append(std::move(e));
    }
  }

  // Nested latitude caps: domain monotonicity up to discretization, and the
  // calibrated shrinking constant.
  {
    const auto& nest = fk.at("nested");
    const Lune lune(nest.at("lune_a").get<double>());
    const double b0 = nest.at("b0").get<double>();
    const double hn = nest.at("h").get<double>();
    const double mu0 =
        dn_eigenvalue(LatitudeCapSpec{lune, b0, false}, hn, tol).value;
    bool monotone = true;
    double c_hat = 0.0;
    ClaimResult c;
    c.values = {{"mu_V", mu0}};
    int k = 0;
    for (const auto& bj : nest.at("b_shrunk")) {
      const double bk = bj.get<double>();
      const double muk =
          dn_eigenvalue(LatitudeCapSpec{lune, bk, false}, hn, tol).value;
      const double area_gap = lune.a() * kPi * (std::sin(bk) - std::sin(b0));
      monotone = monotone && muk >= mu0 - 5.0 * hn * hn;
      c_hat = std::max(c_hat, (muk / mu0 - 1.0) / area_gap);
      c.values.emplace_back("mu_k" + std::to_string(k), muk);
      ++k;
    }
    c.id = "fk.nested-monotonicity";
    c.statement =
        "enlarging the Dirichlet part by shrinking V does not decrease mu, "
        "up to the O(h^2) discretization band";
    c.inputs_digest = dig;
    c.tolerance = 5.0 * hn * hn;
    c.verdict = verdict_of(monotone);
    report.append(std::move(c));

    ClaimResult cc;
    cc.id = "fk.shrink-constant";
    cc.statement =
        "calibrated C with mu(V_k) <= mu(V)(1 + C Area(V minus V_k)) on the "
        "nested family (reported, not asserted)";
    cc.inputs_digest = dig;
    cc.tolerance = 0.0;
    cc.values = {{"C_hat", c_hat}};
    cc.verdict = ClaimResult::Verdict::informational;
    report.append(std::move(cc));
  }

  return report;
}

// ---------------------------------------------------------------------------
// Lemma suite: smoothing, curvature budgets, sum lemma, angle dichotomy.

Report run_lemma_suite(const SuiteConfig& cfg, std::uint64_t seed) {
  Report report;
  report.suite = "lemma";
  report.seed = seed;
  report.config_version = cfg.version();
  const auto& lem = cfg.data.at("lemma");
  const std::string dig = digest(lem, seed);

  std::vector<double> a_grid, eps_grid;
  for (const auto& v : lem.at("a_grid")) a_grid.push_back(v.get<double>());
  for (const auto& v : lem.at("eps_grid")) eps_grid.push_back(v.get<double>());
  const double c_hat = calibrate_budget_constant(a_grid, eps_grid);

  {
    double worst_match = 0.0;
    bool signs = true;
    double worst_keps = 0.0;
    bool monotone = true;
    double worst_gb = 0.0;
    bool budget_ok = true;
    double worst_area_ratio = 0.0;
    for (double a : a_grid) {
      const SpindleParam param(a);
      for (double eps : eps_grid) {
        const SmoothedTipProfile s = smoothing_coeffs(param, eps);
        worst_match = std::max(
            {worst_match, std::abs(s.w(eps) - tip_profile_w(param, eps)),
             std::abs(s.w1(eps) - tip_profile_w1(param, eps)),
             std::abs(s.w2(eps) - tip_profile_w2(param, eps))});
        signs = signs && s.b1 > 0.0 && s.b2 < 0.0 && sign_conditions(s).ok;
        worst_keps = std::max(worst_keps, std::abs(s.curvature(eps) - 1.0));
        double prev = s.curvature(0.0);
        for (int i = 1; i <= 10000; ++i) {
          const double k = s.curvature(eps * i / 10000.0);
          if (k > prev + 1e-12 || k <= 0.0) monotone = false;
          prev = k;
        }
        const double gb = total_curvature_smoothed(param, eps);
        worst_gb = std::max(worst_gb, std::abs(gb - 4.0 * kPi) / (4.0 * kPi));
        const double mass = tip_curvature_mass(s);
        budget_ok =
            budget_ok && mass <= 2.0 * kPi * (1.0 - a) + c_hat * eps;
        worst_area_ratio =
            std::max(worst_area_ratio,
                     std::abs(smoothed_area(param, eps) - 4.0 * kPi * a) / eps);
      }
    }
    ClaimResult c1;
    c1.id = "lemma.smoothing.match";
    c1.statement =
        "C^2 matching residuals at eps are <= 1e-9 and b1 > 0 > b2 with the "
        "profile sign conditions";
    c1.inputs_digest = dig;
    c1.tolerance = 1e-9;
    c1.values = {{"worst_residual", worst_match}};
    c1.verdict = verdict_of(signs && worst_match <= 1e-9);
    report.append(std::move(c1));

    ClaimResult c2;
    c2.id = "lemma.smoothing.curvature";
    c2.statement =
        "K(eps) = 1 within 1e-6, and K is positive and non-increasing on "
        "[0, eps] (1e4-point grid)";
    c2.inputs_digest = dig;
    c2.tolerance = 1e-6;
    c2.values = {{"worst_K_eps_deviation", worst_keps}};
    c2.verdict = verdict_of(monotone && worst_keps <= 1e-6);
    report.append(std::move(c2));

    ClaimResult c3;
    c3.id = "lemma.smoothing.gauss-bonnet";
    c3.statement =
        "total curvature of the smoothed surface equals 4 pi within 0.1%";
    c3.inputs_digest = dig;
    c3.tolerance = 1e-3;
    c3.values = {{"worst_relative_deviation", worst_gb}};
    c3.verdict = verdict_of(worst_gb <= 1e-3);
    report.append(std::move(c3));

    ClaimResult c4;
    c4.id = "lemma.smoothing.tip-budget";
    c4.statement =
        "single-tip curvature mass <= 2 pi (1 - a) + C_hat eps with the "
        "calibrated C_hat";
    c4.inputs_digest = dig;
    c4.tolerance = c_hat;
    c4.values = {{"C_hat", c_hat}};
    c4.verdict = verdict_of(budget_ok);
    report.append(std::move(c4));

    ClaimResult c5;
    c5.id = "lemma.smoothing.area";
    c5.statement =
        "area deficit |Area(S_{a,eps}) - 4 pi a| / eps over the grid "
        "(calibration, reported only)";
    c5.inputs_digest = dig;
    c5.tolerance = 0.0;
    c5.values = {{"worst_ratio", worst_area_ratio}};
    c5.verdict = ClaimResult::Verdict::informational;
    report.append(std::move(c5));
  }

  {
    // Richardson extrapolation of the tip mass in eps^2 toward 2 pi (1-a).
    double worst = 0.0;
    for (double a : a_grid) {
      const SpindleParam param(a);
      const double m1 = tip_curvature_mass(smoothing_coeffs(param, 1e-2));
      const double m2 = tip_curvature_mass(smoothing_coeffs(param, 5e-3));
      const double extrap = m2 + (m2 - m1) / 3.0;
      worst = std::max(worst, std::abs(extrap - 2.0 * kPi * (1.0 - a)));
    }
    ClaimResult c;
    c.id = "lemma.smoothing.tip-limit";
    c.statement =
        "tip curvature mass tends to 2 pi (1 - a) as eps -> 0 (Richardson "
        "over eps in {1e-2, 5e-3})";
    c.inputs_digest = dig;
    c.tolerance = 1e-6;
    c.values = {{"worst_extrapolated_deviation", worst}};
    c.verdict = verdict_of(worst <= 1e-6);
    report.append(std::move(c));
  }

  {
    Rng rng(seed * 31337ull + 5);
    const int trials = lem.at("sum_trials").get<int>();
    bool all_strict = true;
    for (int t = 0; t < trials; ++t) {
      const double a = rng.uniform(0.05, 1.0);
      const int m = rng.uniform_int(2, 6);
      std::vector<double> lengths, areas;
      for (int j = 0; j < m; ++j) {
        const double area = rng.uniform(1e-3, 4.0 * kPi * a - 1e-3);
        const double base = std::sqrt(area * (4.0 * kPi * a - area));
        lengths.push_back(base * (1.0 + rng.uniform(0.0, 0.5)));
        areas.push_back(area);
      }
      all_strict = all_strict && lemma_sum_check(lengths, areas, a);
    }
    ClaimResult c;
    c.id = "lemma.sum";
    c.statement =
        "(sum L)^2 > (sum A)(4 pi a - sum A), strictly, whenever every pair "
        "satisfies the single-curve inequality";
    c.inputs_digest = dig;
    c.tolerance = 0.0;
    c.values = {{"trials", static_cast<double>(trials)}};
    c.verdict = verdict_of(all_strict);
    report.append(std::move(c));
  }

  {
    Rng rng(seed * 29ull + 11);
    const int count = lem.at("genp_polygons").get<int>();
    double worst_identity = 0.0;
    bool dichotomy = true;
    for (int t = 0; t < count; ++t) {
      const SphericalPolygon poly = random_convex_polygon(rng, 3, 8);
      const AngleReport rep = analyze(poly);
      const int n = poly.size();
      std::vector<double> rotated(rep.interior.begin(), rep.interior.end());
      for (int rot = 0; rot < n; ++rot) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        for (int m = 0; m <= n; ++m) {
          const DichotomyReport d = gen_p_dichotomy(rotated, m, rep.a);
          worst_identity =
              std::max(worst_identity, std::abs(d.q1 + d.q2 - 2.0 * rep.a));
          dichotomy = dichotomy && std::max(d.q1, d.q2) >= rep.a - 1e-12;
        }
      }
    }
    ClaimResult c1;
    c1.id = "lemma.genp.identity";
    c1.statement =
        "q1 + q2 = 2a within 1e-12, over all splits and cyclic orders";
    c1.inputs_digest = dig;
    c1.tolerance = 1e-12;
    c1.values = {{"polygons", static_cast<double>(count)},
                 {"worst_identity_residual", worst_identity}};
    c1.verdict = verdict_of(worst_identity <= 1e-12);
    report.append(std::move(c1));

    ClaimResult c2;
    c2.id = "lemma.genp.dichotomy";
    c2.statement = "max(q1, q2) >= a, over all splits and cyclic orders";
    c2.inputs_digest = dig;
    c2.tolerance = 1e-12;
    c2.values = {{"polygons", static_cast<double>(count)}};
    c2.verdict = verdict_of(dichotomy);
    report.append(std::move(c2));
  }

  {
    double worst = 0.0;
    const int points = lem.at("ode_points").get<int>();
    for (const auto& av : lem.at("ode_a")) {
      const SpindleParam param(av.get<double>());
      std::vector<double> grid(static_cast<std::size_t>(points));
      for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            4.0 * kPi * param.a * (i + 0.5) / points;
      worst = std::max(worst, profile_ode_identity(param, grid));
    }
    ClaimResult c;
    c.id = "lemma.ode-identity";
    c.statement =
        "L(t) L'(t) = 2 a pi - t for the cap profile, residual <= 1e-10";
    c.inputs_digest = dig;
    c.tolerance = 1e-10;
    c.values = {{"worst_residual", worst}};
    c.verdict = verdict_of(worst <= 1e-10);
    report.append(std::move(c));
  }

  return report;
}

Report run_all_suites(const SuiteConfig& cfg, std::uint64_t seed) {
  Report all;
  all.suite = "all";
  all.seed = seed;
  all.config_version = cfg.version();
  for (auto* fn : {run_theorem_iso_suite, run_faber_krahn_suite,
                   run_lemma_suite}) {
    Report part = fn(cfg, seed);
    for (auto& c : part.claims) all.append(std::move(c));
  }
  return all;
}

// ---------------------------------------------------------------------------
// Writers (deterministic, own formatting).

namespace {

const char* verdict_name(ClaimResult::Verdict v) {
  switch (v) {
    case ClaimResult::Verdict::pass: return "pass";
    case ClaimResult::Verdict::fail: return "fail";
    default: return "informational";
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void write_report_json(const Report& report, std::ostream& out) {
  out << "{\n";
  out << "  \"suite\": \"" << json_escape(report.suite) << "\",\n";
  out << "  \"seed\": " << report.seed << ",\n";
  out << "  \"config_version\": " << report.config_version << ",\n";
  out << "  \"failures\": " << report.failures() << ",\n";
  out << "  \"claims\": [\n";
  for (std::size_t i = 0; i < report.claims.size(); ++i) {
    const ClaimResult& c = report.claims[i];
    out << "    {\n";
    out << "      \"id\": \"" << json_escape(c.id) << "\",\n";
    out << "      \"statement\": \"" << json_escape(c.statement) << "\",\n";
    out << "      \"inputs_digest\": \"" << json_escape(c.inputs_digest)
        << "\",\n";
    out << "      \"tolerance\": " << fmt_json(c.tolerance) << ",\n";
    out << "      \"verdict\": \"" << verdict_name(c.verdict) << "\",\n";
    out << "      \"values\": {";
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      if (k) out << ", ";
      out << "\"" << json_escape(c.values[k].first)
          << "\": " << fmt_json(c.values[k].second);
    }
    out << "}\n";
    out << "    }" << (i + 1 < report.claims.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
}

void write_report_csv(const Report& report, std::ostream& out) {
  out << "suite,seed,claim,verdict,tolerance,key,value\n";
  for (const ClaimResult& c : report.claims) {
    for (const auto& [key, value] : c.values) {
      out << report.suite << ',' << report.seed << ',' << c.id << ','
          << verdict_name(c.verdict) << ',' << fmt_csv(c.tolerance) << ','
          << key << ',' << fmt_csv(value) << '\n';
    }
  }
}

}  // namespace spindle
