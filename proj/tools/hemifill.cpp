// Command line front end. Subcommands cover the transport solvers, the
// hemisphere embedding, the Lipschitz extension, convex-body Jacobians, the
// filling-area certificate, the verification suites and two parameter
// sweeps. All output is deterministic for a fixed seed and thread-agnostic.
//
// Exit codes: 0 success, 1 a verification failed or a solver gave up,
// 2 malformed input.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hemifill/areas.hpp"
#include "hemifill/barycenter.hpp"
#include "hemifill/curve.hpp"
#include "hemifill/embedding.hpp"
#include "hemifill/errors.hpp"
#include "hemifill/io.hpp"
#include "hemifill/measure.hpp"
#include "hemifill/norms.hpp"
#include "hemifill/parallel.hpp"
#include "hemifill/rng.hpp"
#include "hemifill/sphere.hpp"
#include "hemifill/transport.hpp"
#include "hemifill/verify.hpp"

namespace {

using hemifill::kTwoPi;
using json = nlohmann::json;

struct Options {
  std::uint64_t seed = hemifill::kDefaultSeed;
  bool serial = false;
  std::string out;

  bool parallel() const { return !serial; }
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    hemifill::write_text_file(opt.out, text);
  }
}

void emit_json(const Options& opt, const json& doc) {
  emit(opt, doc.dump(2) + "\n");
}

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

hemifill::JacobianKind parse_jacobian_kind(const std::string& name) {
  if (name == "busemann") return hemifill::JacobianKind::Busemann;
  if (name == "holmes-thompson") return hemifill::JacobianKind::HolmesThompson;
  if (name == "inscribed") return hemifill::JacobianKind::InscribedRiemannian;
  throw hemifill::InputError("unknown jacobian kind: " + name);
}

json measure_to_json(const hemifill::CircularMeasure& mu) {
  return json::parse(hemifill::format_measure_json(mu));
}

// The report always carries a top-level distance, the cut coordinate when
// the balanced-cut route ran, and certificate_gap, the disagreement between
// the requested route and an independent one (the CDF shift for cut and lp,
// the cut construction for cdf, the full spread for all).
int run_w1(const Options& opt, const std::string& mu_path,
           const std::string& nu_path, const std::string& method) {
  const hemifill::CircularMeasure mu =
      hemifill::parse_measure_json(hemifill::read_text_file(mu_path));
  const hemifill::CircularMeasure nu =
      hemifill::parse_measure_json(hemifill::read_text_file(nu_path));
  const bool want_cut = method == "cut" || method == "all";
  const bool want_cdf = method == "cdf" || method == "all";
  const bool want_lp = method == "lp" || method == "all";
  json doc;
  doc["mu"] = mu_path;
  doc["nu"] = nu_path;
  doc["method"] = method;
  json routes;
  const double cdf_distance = hemifill::w1_cdf_shift(mu, nu);
  if (want_cdf) routes["cdf"]["distance"] = cdf_distance;
  double cut_distance = 0.0;
  if (want_cut || method == "cdf") {
    const hemifill::TransportResult r = hemifill::w1_circle(mu, nu);
    cut_distance = r.distance;
    if (want_cut) {
      routes["cut"]["distance"] = r.distance;
      routes["cut"]["cut"] = r.cut.cut;
      routes["cut"]["level"] = r.cut.level;
      routes["cut"]["m_length"] = r.cut.m_length();
      routes["cut"]["n_length"] = r.cut.n_length();
      doc["cut"] = r.cut.cut;
    }
  }
  double lp_distance = 0.0;
  if (want_lp) {
    const hemifill::LpSolution s = hemifill::lp_oracle(mu, nu);
    lp_distance = s.cost;
    routes["lp"]["distance"] = s.cost;
    routes["lp"]["support"] = s.coupling.size();
  }
  if (method == "cut") {
    doc["distance"] = cut_distance;
    doc["certificate_gap"] = std::abs(cut_distance - cdf_distance);
  } else if (method == "cdf") {
    doc["distance"] = cdf_distance;
    doc["certificate_gap"] = std::abs(cdf_distance - cut_distance);
  } else if (method == "lp") {
    doc["distance"] = lp_distance;
    doc["certificate_gap"] = std::abs(lp_distance - cdf_distance);
  } else {
    const double lo = std::min({cut_distance, cdf_distance, lp_distance});
    const double hi = std::max({cut_distance, cdf_distance, lp_distance});
    doc["distance"] = cut_distance;
    doc["certificate_gap"] = hi - lo;
    doc["spread"] = hi - lo;
  }
  doc["routes"] = std::move(routes);
  emit_json(opt, doc);
  return 0;
}

int run_embed(const Options& opt, double azimuth, double colatitude,
              std::size_t grid) {
  const hemifill::SpherePoint p(azimuth, colatitude);
  const hemifill::EmbeddedPoint e = hemifill::iota(p, grid);
  json doc;
  doc["azimuth"] = p.azimuth;
  doc["colatitude"] = p.colatitude;
  doc["k"] = p.k();
  doc["grid_size"] = grid;
  doc["boundary"] = e.boundary;
  doc["measure"] = measure_to_json(e.measure);
  if (!e.boundary) {
    doc["half_circle_error"] = hemifill::half_circle_mass_error(e);
  }
  emit_json(opt, doc);
  return 0;
}

int run_extend(const Options& opt, const std::string& curve_path,
               double azimuth, double colatitude, std::size_t grid) {
  const hemifill::LipschitzCurve curve =
      hemifill::parse_curve_json(hemifill::read_text_file(curve_path));
  const hemifill::HemisphereMap map(curve, grid);
  const hemifill::SpherePoint p(azimuth, colatitude);
  json doc;
  doc["curve"] = curve_path;
  doc["grid_size"] = grid;
  doc["azimuth"] = p.azimuth;
  doc["colatitude"] = p.colatitude;
  doc["value"] = map(p);
  doc["curve_lipschitz_bound"] = curve.lipschitz_bound();
  emit_json(opt, doc);
  return 0;
}

int run_jacobian(const Options& opt, const std::string& norm_spec,
                 const std::string& kind) {
  const hemifill::PlanarNorm body = hemifill::parse_norm_spec(norm_spec);
  json doc;
  doc["norm"] = json::parse(hemifill::format_norm_json(body));
  doc["ball_area"] = body.ball_area();
  doc["dual_ball_area"] = body.dual().ball_area();
  if (kind == "busemann" || kind == "all") {
    doc["busemann"] = hemifill::jacobian_busemann(body);
  }
  if (kind == "holmes-thompson" || kind == "all") {
    doc["holmes_thompson"] = hemifill::jacobian_holmes_thompson(body);
  }
  if (kind == "inscribed" || kind == "all") {
    doc["inscribed"] = hemifill::jacobian_inscribed(body);
    const hemifill::PlanarNorm john = hemifill::john_ellipse(body);
    doc["john_axes"] = {john.axis_a(), john.axis_b()};
  }
  emit_json(opt, doc);
  return 0;
}

int run_fill_area(const Options& opt, const std::string& curve_path,
                  const std::string& kind, std::size_t grid,
                  std::size_t radial, std::size_t angular) {
  const hemifill::LipschitzCurve curve =
      hemifill::parse_curve_json(hemifill::read_text_file(curve_path));
  const hemifill::FillReport rep = hemifill::filling_area_bound(
      curve, parse_jacobian_kind(kind), grid, radial, angular,
      opt.parallel());
  json doc;
  doc["curve"] = curve_path;
  doc["jacobian"] = kind;
  doc["grid_size"] = grid;
  doc["radial"] = radial;
  doc["angular"] = angular;
  doc["length"] = rep.length;
  doc["lipschitz"] = rep.lipschitz;
  doc["bound"] = rep.bound;
  doc["area"] = rep.area.area;
  doc["cells"] = rep.area.cells;
  doc["degenerate_cells"] = rep.area.degenerate_cells;
  doc["max_convexity_gap"] = rep.area.max_convexity_gap;
  doc["within_bound"] = rep.area.area <= rep.bound * (1.0 + 2e-2);
  emit_json(opt, doc);
  return 0;
}

int run_verify(const Options& opt, const std::vector<std::string>& suites,
               const std::string& format) {
  std::vector<hemifill::CheckResult> results;
  auto add = [&results](std::vector<hemifill::CheckResult> part) {
    for (auto& r : part) results.push_back(std::move(r));
  };
  for (const std::string& s : suites) {
    if (s == "all") {
      add(hemifill::run_all_checks(opt.seed, opt.parallel()));
    } else if (s == "transport") {
      add(hemifill::check_transport_agreement(opt.seed, opt.parallel()));
    } else if (s == "dirac") {
      add(hemifill::check_dirac_pairs(opt.seed));
    } else if (s == "embedding") {
      add(hemifill::check_embedding_identities(opt.seed, opt.parallel()));
    } else if (s == "isometry") {
      add(hemifill::check_isometry_convergence(opt.seed, opt.parallel()));
    } else if (s == "lipschitz") {
      add(hemifill::check_lipschitz_extension(opt.seed, opt.parallel()));
    } else if (s == "gmono") {
      add(hemifill::check_g_monotonicity(opt.parallel()));
    } else if (s == "jacobians") {
      add(hemifill::check_jacobian_bounds(opt.seed, opt.parallel()));
    } else if (s == "areas") {
      add(hemifill::check_filling_areas(opt.parallel()));
    } else {
      throw hemifill::InputError("unknown verify suite: " + s);
    }
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  if (format == "json") {
    json doc;
    doc["seed"] = opt.seed;
    doc["parallel"] = opt.parallel();
    doc["workers"] = hemifill::par::worker_count();
    doc["passed"] = passed;
    doc["total"] = results.size();
    doc["checks"] = json::array();
    for (const auto& r : results) {
      doc["checks"].push_back(
          {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    emit_json(opt, doc);
  } else {
    std::ostringstream text;
    for (const auto& r : results) {
      text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
           << "\n";
    }
    text << passed << " of " << results.size() << " checks passed (seed "
         << opt.seed << ")\n";
    emit(opt, text.str());
  }
  return passed == results.size() ? 0 : 1;
}

int run_sweep_isometry(const Options& opt, std::size_t pairs,
                       const std::vector<std::size_t>& grids) {
  std::ostringstream csv;
  csv << "grid,pairs,max_error,mean_error,worst_sphere,worst_wasserstein\n";
  for (std::size_t grid : grids) {
    const hemifill::IsometryReport rep =
        hemifill::verify_isometry(pairs, grid, opt.seed, opt.parallel());
    csv << grid << ',' << rep.pairs << ',' << csv_num(rep.max_error) << ','
        << csv_num(rep.mean_error) << ',' << csv_num(rep.worst.sphere) << ','
        << csv_num(rep.worst.wasserstein) << "\n";
  }
  emit(opt, csv.str());
  return 0;
}

int run_sweep_mahler(const Options& opt, std::size_t bodies) {
  std::ostringstream csv;
  csv << "index,vertex_pairs,ball_area,volume_product,ht_over_b,b_over_ir,"
         "ht_over_ir\n";
  for (std::size_t i = 0; i < bodies; ++i) {
    hemifill::Rng rng(hemifill::mix_seed(opt.seed, 3000000 + i));
    const std::size_t m = 2 + static_cast<std::size_t>(rng.below(7));
    std::vector<hemifill::Vec2> pts(m);
    for (auto& p : pts) {
      const double r = rng.uniform(0.3, 3.0);
      const double t = rng.angle();
      p = {r * std::cos(t), r * std::sin(t)};
    }
    const hemifill::PlanarNorm body = hemifill::PlanarNorm::polygon(pts);
    if (body.degenerate()) continue;
    const double jb = hemifill::jacobian_busemann(body);
    const double jht = hemifill::jacobian_holmes_thompson(body);
    const double jir = hemifill::jacobian_inscribed(body);
    csv << i << ',' << m << ',' << csv_num(body.ball_area()) << ','
        << csv_num(body.ball_area() * body.dual().ball_area()) << ','
        << csv_num(jht / jb) << ',' << csv_num(jb / jir) << ','
        << csv_num(jht / jir) << "\n";
  }
  emit(opt, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal transport on the circle and hemisphere filling"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "random seed for sampled checks");
  app.add_flag("--serial", opt.serial, "disable the parallel kernels");
  app.add_option("--out", opt.out, "write output to a file instead of stdout");

  auto* w1 = app.add_subcommand("w1", "Wasserstein-1 distance on the circle");
  std::string mu_path, nu_path, method = "cut";
  w1->add_option("--mu", mu_path, "measure JSON file")->required();
  w1->add_option("--nu", nu_path, "measure JSON file")->required();
  w1->add_option("--method", method, "cut | cdf | lp | all")
      ->check(CLI::IsMember({"cut", "cdf", "lp", "all"}));

  auto* embed = app.add_subcommand("embed", "embed a hemisphere point");
  double azimuth = 0.0, colatitude = 0.0;
  std::size_t grid = 1024;
  embed->add_option("--azimuth", azimuth, "azimuth in [0, 2pi)")->required();
  embed->add_option("--colatitude", colatitude, "colatitude in [0, pi/2]")
      ->required();
  embed->add_option("--grid", grid, "circle grid size, even");

  auto* extend = app.add_subcommand("extend", "evaluate a curve extension");
  std::string curve_path;
  extend->add_option("--curve", curve_path, "curve JSON file")->required();
  extend->add_option("--azimuth", azimuth, "azimuth in [0, 2pi)")->required();
  extend->add_option("--colatitude", colatitude, "colatitude in [0, pi/2]")
      ->required();
  extend->add_option("--grid", grid, "circle grid size, even");

  auto* jac = app.add_subcommand("jacobian", "convex body area densities");
  std::string norm_spec, jac_kind = "all";
  jac->add_option("--norm", norm_spec,
                  "l1 | l2 | linf | inline JSON | @file")
      ->required();
  jac->add_option("--kind", jac_kind,
                  "busemann | holmes-thompson | inscribed | all");

  auto* fill = app.add_subcommand("fill-area", "filling area certificate");
  std::string fill_kind = "busemann";
  std::size_t radial = 64, angular = 128;
  fill->add_option("--curve", curve_path, "curve JSON file")->required();
  fill->add_option("--jacobian", fill_kind,
                   "busemann | holmes-thompson | inscribed");
  fill->add_option("--grid", grid, "circle grid size, even");
  fill->add_option("--radial", radial, "radial quadrature cells");
  fill->add_option("--angular", angular, "angular quadrature cells");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  std::string format = "text";
  verify->add_option("suites", suites,
                     "all | transport | dirac | embedding | isometry | "
                     "lipschitz | gmono | jacobians | areas");
  verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand("sweep", "CSV parameter sweeps");
  auto* sweep_iso = sweep->add_subcommand(
      "isometry", "embedding error against grid resolution");
  std::size_t pairs = 200;
  std::vector<std::size_t> grids = {256, 512, 1024, 2048};
  sweep_iso->add_option("--pairs", pairs, "point pairs per grid");
  sweep_iso->add_option("--grids", grids, "grid sizes to sweep")
      ->delimiter(',');
  auto* sweep_mahler = sweep->add_subcommand(
      "mahler", "jacobian ratios over random polygon bodies");
  std::size_t bodies = 1000;
  sweep_mahler->add_option("--bodies", bodies, "number of random bodies");
  sweep->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*w1) return run_w1(opt, mu_path, nu_path, method);
    if (*embed) return run_embed(opt, azimuth, colatitude, grid);
    if (*extend)
      return run_extend(opt, curve_path, azimuth, colatitude, grid);
    if (*jac) return run_jacobian(opt, norm_spec, jac_kind);
    if (*fill)
      return run_fill_area(opt, curve_path, fill_kind, grid, radial, angular);
    if (*verify) {
      if (suites.empty()) suites.push_back("all");
      return run_verify(opt, suites, format);
    }
    if (*sweep_iso) return run_sweep_isometry(opt, pairs, grids);
    if (*sweep_mahler) return run_sweep_mahler(opt, bodies);
  } catch (const hemifill::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
