// plankcert: measure, coverage-check, certify and render disc covering
// scenes.
//
// Exit codes: 0 ok, 1 not covered (certificate vacuous), 2 input error,
// 3 identity/inequality violation, 4 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plankcert/certify.hpp"
#include "plankcert/coverage.hpp"
#include "plankcert/geom.hpp"
#include "plankcert/measure.hpp"
#include "plankcert/numerics.hpp"
#include "plankcert/scene.hpp"
#include "plankcert/svg_render.hpp"

namespace {

namespace geom = plankcert::geom;
namespace measure = plankcert::measure;
namespace coverage = plankcert::coverage;
namespace certify = plankcert::certify;
namespace scene_ns = plankcert::scene;

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVacuous = 1;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;
constexpr int kExitIo = 4;

scene_ns::Scene load_scene(const std::string& path) {
  if (path.empty()) return scene_ns::default_scene();
  return scene_ns::load_file(path);
}

json coverage_to_json(const coverage::CoverageReport& report) {
  json j;
  j["covered"] = report.covered;
  j["radii_checked"] = report.radii_checked;
  j["min_slack"] = report.min_slack;
  if (report.witness) j["witness"] = {report.witness->x, report.witness->y};
  return j;
}

void write_text_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << text;
    if (!out) throw std::ios_base::failure("failed writing output file: " + path);
  }
  std::filesystem::rename(tmp, target);
}

// True when the wedge is regular in the vertex-on-K sense, which makes
// mu(D ∩ T) equal its opening angle.
bool paper_regular(const geom::AnnulusConfig& config, const geom::AngularDomain& d) {
  if (std::fabs(geom::norm(d.vertex) - config.R) > 1e-9 * config.R) return false;
  for (double ray : {d.start_direction, d.start_direction + d.sweep}) {
    if (geom::ray_circle_hits(d.vertex, ray, config.r).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

int cmd_measure(const scene_ns::Scene& scene, const std::string& method, double tol,
                bool json_output) {
  const auto& config = scene.config;
  const bool want_closed = method != "quad";
  const bool want_quad = method != "closed";

  json out;
  out["config"] = {{"r", config.r}, {"R", config.R}, {"epsilon", config.epsilon}};
  out["view_angle"] = geom::view_angle(config);
  out["mu_disc"] = measure::mu_disc(config);
  out["domains"] = json::array();

  for (std::size_t i = 0; i < scene.domains.size(); ++i) {
    const auto& entry = scene.domains[i];
    json row;
    row["index"] = i;
    row["kind"] = entry.kind == scene_ns::DomainEntry::Kind::regular ? "regular" : "angular";
    if (want_closed) {
      if (entry.kind == scene_ns::DomainEntry::Kind::regular) {
        const auto m = measure::mu_regular(config, entry.regular, measure::Method::closed_form);
        row["closed_form"] = m.value;
      } else if (paper_regular(config, entry.angular)) {
        row["closed_form"] = entry.angular.sweep;
      } else {
        row["closed_form"] = nullptr;  // no closed form away from K
      }
    }
    if (want_quad) {
      const auto m =
          measure::mu_region(config, measure::profile_of(entry.as_angular()), tol);
      row["quadrature"] = m.value;
      row["error_estimate"] = m.error_estimate;
    }
    out["domains"].push_back(row);
  }

  if (json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("config: r=%.12g R=%.12g epsilon=%.12g\n", config.r, config.R, config.epsilon);
    std::printf("mu(T) = view angle = %.12g\n", measure::mu_disc(config));
    for (const auto& row : out["domains"]) {
      std::printf("domain[%d] (%s):", row["index"].get<int>(),
                  row["kind"].get<std::string>().c_str());
      if (row.contains("closed_form")) {
        if (row["closed_form"].is_null()) {
          std::printf("  closed_form=n/a");
        } else {
          std::printf("  closed_form=%.12g", row["closed_form"].get<double>());
        }
      }
      if (row.contains("quadrature")) {
        std::printf("  quadrature=%.12g (err<=%.3g)", row["quadrature"].get<double>(),
                    row["error_estimate"].get<double>());
      }
      std::printf("\n");
    }
    if (scene.domains.empty()) std::printf("(no domains in scene)\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check-coverage
// ---------------------------------------------------------------------------

int cmd_check_coverage(const scene_ns::Scene& scene, int radial_steps, bool json_output) {
  const auto domains = scene.angular_domains();
  const auto report =
      coverage::check_coverage(scene.config, domains, scene.strips, radial_steps);

  if (json_output) {
    std::cout << coverage_to_json(report).dump(2) << "\n";
  } else {
    std::printf("coverage: %s (radii_checked=%d, min_slack=%.6g)\n",
                report.covered ? "covered" : "NOT covered", report.radii_checked,
                report.min_slack);
    if (report.witness) {
      std::printf("witness: (%.12g, %.12g)\n", report.witness->x, report.witness->y);
    }
  }
  return report.covered ? kExitOk : kExitVacuous;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

int cmd_certify(const scene_ns::Scene& scene, const std::string& theorem, int radial_steps,
                bool json_output) {
  if (theorem == "plank") {
    if (std::fabs(scene.config.r - 1.0) > 1e-12) {
      throw std::invalid_argument("plank certification expects a unit-disc scene (config.r == 1)");
    }
    const auto cert = certify::certify_plank(scene.strips, radial_steps);

    double zone_residual = 0.0;
    for (std::size_t i = 0; i < scene.strips.size(); ++i) {
      zone_residual = std::max(zone_residual,
                               std::fabs(cert.zone_areas[i] -
                                         2.0 * geom::kPi * scene.strips[i].width()));
    }
    const bool zones_ok = zone_residual <= 1e-6;

    json out;
    out["theorem"] = "plank";
    out["covered"] = cert.coverage.covered;
    out["asserted"] = cert.asserted;
    out["inequality_holds"] = cert.inequality_holds;
    out["sum_widths"] = cert.sum_widths;
    out["bound"] = cert.bound;
    out["zone_areas"] = cert.zone_areas;
    out["zone_residual_max"] = zone_residual;
    out["coverage"] = coverage_to_json(cert.coverage);
    if (json_output) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::printf("plank certificate: %s\n",
                  !cert.asserted ? "VACUOUS (not covered)"
                  : cert.inequality_holds ? "holds" : "VIOLATED");
      std::printf("  sum of widths = %.12g (bound %.12g)\n", cert.sum_widths, cert.bound);
      std::printf("  zone areas vs 2*pi*d: max residual %.3g\n", zone_residual);
      if (cert.coverage.witness) {
        std::printf("  witness: (%.12g, %.12g)\n", cert.coverage.witness->x,
                    cert.coverage.witness->y);
      }
    }
    if (!cert.asserted) return kExitVacuous;
    return (cert.inequality_holds && zones_ok) ? kExitOk : kExitViolation;
  }

  if (theorem != "angular") {
    throw std::invalid_argument("unknown theorem (expected 'angular' or 'plank')");
  }

  const auto domains = scene.angular_domains();
  const auto cert = certify::certify_angular(scene.config, domains, radial_steps);

  json out;
  out["theorem"] = "angular";
  out["covered"] = cert.coverage.covered;
  out["asserted"] = cert.asserted;
  out["inequality_holds"] = cert.inequality_holds;
  out["sum_angles"] = cert.sum_angles;
  out["view_angle"] = cert.view_angle;
  out["slack"] = cert.slack;
  out["sum_measures"] = cert.sum_measures;
  out["mu_chain_holds"] = cert.mu_chain_holds;
  out["measures"] = json::array();
  for (const auto& m : cert.domain_measures) {
    out["measures"].push_back({{"value", m.value}, {"error_estimate", m.error_estimate}});
  }
  out["angle_ratios"] = json::array();
  for (const auto& reg : cert.regularizations) {
    out["angle_ratios"].push_back(reg.angle_ratio);
  }
  out["coverage"] = coverage_to_json(cert.coverage);

  if (json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("angular certificate: %s\n",
                !cert.asserted ? "VACUOUS (not covered)"
                : cert.inequality_holds ? "holds" : "VIOLATED");
    std::printf("  sum of angles = %.12g, view angle = %.12g, slack = %.6g\n",
                cert.sum_angles, cert.view_angle, cert.slack);
    std::printf("  sum of mu(D_i ∩ T) = %.12g (chain %s)\n", cert.sum_measures,
                !cert.asserted ? "not asserted" : cert.mu_chain_holds ? "holds" : "VIOLATED");
    if (cert.coverage.witness) {
      std::printf("  witness: (%.12g, %.12g)\n", cert.coverage.witness->x,
                  cert.coverage.witness->y);
    }
  }
  if (!cert.asserted) return kExitVacuous;
  return (cert.inequality_holds && cert.mu_chain_holds) ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

int cmd_render(const scene_ns::Scene& scene, const std::string& out_path, int resolution,
               const std::string& certificate_path) {
  plankcert::svg::RenderOptions options;
  options.resolution = resolution;

  if (!certificate_path.empty()) {
    std::ifstream in(certificate_path);
    if (!in) throw std::ios_base::failure("cannot open certificate file: " + certificate_path);
    json cert = json::parse(in, nullptr, true);
    if (cert.contains("coverage") && cert["coverage"].contains("witness")) {
      const auto& w = cert["coverage"]["witness"];
      options.witness = geom::PointXY{w[0].get<double>(), w[1].get<double>()};
    } else if (cert.contains("witness")) {
      const auto& w = cert["witness"];
      options.witness = geom::PointXY{w[0].get<double>(), w[1].get<double>()};
    }
  }

  write_text_atomically(out_path, plankcert::svg::render(scene, options));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle-compare
// ---------------------------------------------------------------------------

struct OracleRow {
  std::string identity;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// Comparison tolerance: 1e-7, relaxed to 1e-6 when the inner integration
// bound |d| comes within 1e-3*r of the singular radius.
double alpha_tolerance(const geom::AnnulusConfig& config, double alpha) {
  const double d = std::fabs(config.R * std::sin(config.epsilon - alpha));
  return (config.r - d < 1e-3 * config.r) ? 1e-6 : 1e-7;
}

int cmd_oracle_compare(const scene_ns::Scene& scene, int grid, unsigned long seed,
                       bool json_output) {
  const auto& config = scene.config;
  std::vector<OracleRow> rows;
  const auto run_row = [&rows](const std::string& name, double tol, auto&& body) {
    OracleRow row;
    row.identity = name;
    row.tolerance = tol;
    try {
      row.max_residual = body();
      row.pass = row.max_residual <= tol;
    } catch (const plankcert::numerics::quadrature_error& e) {
      row.pass = false;
      row.max_residual = std::numeric_limits<double>::infinity();
      row.note = e.what();
    }
    rows.push_back(row);
  };

  run_row("disc_measure", 1e-8, [&] {
    const auto m = measure::mu_region(config, measure::full_disc_profile(), 1e-10);
    return std::fabs(m.value - measure::mu_disc(config));
  });

  run_row("antiderivative_endpoints", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double t = -0.95 * config.r +
                       1.9 * config.r * (i + 0.5) / grid;
      worst = std::max(worst, std::fabs(measure::antiderivative_G(config, std::fabs(t), t)));
      const double limit = 1.0 / std::sqrt(config.R * config.R - t * t);
      worst = std::max(worst,
                       std::fabs(measure::antiderivative_G(config, config.r, t) - limit));
    }
    return worst;
  });

  run_row("radial_profile", 1e-8, [&] {
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double t = -0.95 * config.r + 1.9 * config.r * (i + 0.5) / grid;
      const auto closed = measure::radial_profile_integral(config, t, measure::Method::closed_form);
      const auto quad = measure::radial_profile_integral(config, t, measure::Method::quadrature);
      worst = std::max(worst, std::fabs(closed.value - quad.value));
    }
    return worst;
  });

  run_row("radial_profile_edge", 1e-6, [&] {
    double worst = 0.0;
    for (double t : {-0.999 * config.r, 0.999 * config.r}) {
      const auto closed = measure::radial_profile_integral(config, t, measure::Method::closed_form);
      const auto quad = measure::radial_profile_integral(config, t, measure::Method::quadrature);
      worst = std::max(worst, std::fabs(closed.value - quad.value));
    }
    return worst;
  });

  run_row("mu_regular_alpha", 1e-7, [&] {
    double worst = 0.0;
    for (int i = 0; i <= grid; ++i) {
      const double alpha = 2.0 * config.epsilon * i / grid;
      const auto d = geom::make_regular(config, 0.0, +1, alpha);
      const auto quad = measure::mu_regular(config, d, measure::Method::quadrature);
      worst = std::max(worst, std::fabs(quad.value - alpha));
    }
    return worst;
  });

  run_row("mu_regular_near_singular", 1e-6, [&] {
    double worst = 0.0;
    for (double back : {1e-4, 1e-5}) {
      const double alpha = std::max(0.0, 2.0 * config.epsilon - back);
      const auto d = geom::make_regular(config, 0.0, +1, alpha);
      const auto quad = measure::mu_regular(config, d, measure::Method::quadrature);
      worst = std::max(worst, std::fabs(quad.value - alpha));
    }
    return worst;
  });

  run_row("zone_area", 1e-6, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offsets(-1.0, 1.0);
    std::uniform_real_distribution<double> angles(0.0, geom::kTwoPi);
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
      double a = offsets(rng), b = offsets(rng);
      if (a > b) std::swap(a, b);
      const geom::Strip s = geom::Strip::make(angles(rng), a, b);
      const double quad =
          certify::hatbox_zone_area(certify::ZoneSpec{s}, measure::Method::quadrature);
      worst = std::max(worst, std::fabs(quad - 2.0 * geom::kPi * s.width()));
    }
    return worst;
  });

  for (std::size_t i = 0; i < scene.domains.size(); ++i) {
    const auto& entry = scene.domains[i];
    if (entry.kind == scene_ns::DomainEntry::Kind::regular) {
      run_row("domain[" + std::to_string(i) + "]",
              alpha_tolerance(config, entry.regular.alpha), [&] {
                const auto closed =
                    measure::mu_regular(config, entry.regular, measure::Method::closed_form);
                const auto quad =
                    measure::mu_regular(config, entry.regular, measure::Method::quadrature);
                return std::fabs(closed.value - quad.value);
              });
    } else if (paper_regular(config, entry.angular)) {
      run_row("domain[" + std::to_string(i) + "]", 1e-7, [&] {
        const auto quad =
            measure::mu_region(config, measure::profile_of(entry.angular), 1e-10);
        return std::fabs(quad.value - entry.angular.sweep);
      });
    }
  }

  bool all_pass = true;
  for (const auto& row : rows) all_pass = all_pass && row.pass;

  if (json_output) {
    json out;
    out["all_pass"] = all_pass;
    out["rows"] = json::array();
    for (const auto& row : rows) {
      json j = {{"identity", row.identity},
                {"max_residual", row.max_residual},
                {"tolerance", row.tolerance},
                {"pass", row.pass}};
      if (!row.note.empty()) j["note"] = row.note;
      out["rows"].push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%-28s %14s %10s  %s\n", "identity", "max residual", "tolerance", "verdict");
    for (const auto& row : rows) {
      std::printf("%-28s %14.4e %10.1e  %s%s%s\n", row.identity.c_str(), row.max_residual,
                  row.tolerance, row.pass ? "pass" : "FAIL",
                  row.note.empty() ? "" : "  ", row.note.c_str());
    }
  }
  return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure, coverage-check and certify disc covering scenes"};
  app.require_subcommand(1);

  bool json_output = false;
  unsigned long seed = 12345;
  app.add_flag("--json", json_output, "emit machine-readable JSON on stdout");
  app.add_option("--seed", seed, "seed for randomized comparisons (default 12345)");

  std::string scene_path;
  std::string method = "both";
  double tol = 1e-9;
  auto* measure_cmd = app.add_subcommand("measure", "print mu of each scene domain");
  measure_cmd->add_option("scene", scene_path, "scene JSON file (default: built-in r=1,R=2)");
  measure_cmd->add_option("--method", method, "closed|quad|both")
      ->check(CLI::IsMember({"closed", "quad", "both"}));
  measure_cmd->add_option("--tol", tol, "quadrature tolerance");

  std::string cov_scene;
  int radial_steps = coverage::kDefaultRadialSteps;
  auto* cov_cmd = app.add_subcommand("check-coverage", "check that domains+strips cover the disc");
  cov_cmd->add_option("scene", cov_scene, "scene JSON file");
  cov_cmd->add_option("--radial-steps", radial_steps, "radii in the coverage grid (>= 2)");

  std::string cert_scene, theorem = "angular";
  int cert_steps = coverage::kDefaultRadialSteps;
  auto* cert_cmd = app.add_subcommand("certify", "certify the covering inequality");
  cert_cmd->add_option("scene", cert_scene, "scene JSON file");
  cert_cmd->add_option("--theorem", theorem, "angular|plank")
      ->check(CLI::IsMember({"angular", "plank"}));
  cert_cmd->add_option("--radial-steps", cert_steps, "radii in the coverage grid");

  std::string render_scene, out_path, certificate_path;
  int resolution = 800;
  auto* render_cmd = app.add_subcommand("render", "render the scene to SVG");
  render_cmd->add_option("scene", render_scene, "scene JSON file");
  render_cmd->add_option("--out", out_path, "output SVG path")->required();
  render_cmd->add_option("--resolution", resolution, "canvas size in pixels");
  render_cmd->add_option("--certificate", certificate_path,
                         "certificate JSON (from certify --json); draws its witness");

  std::string oracle_scene;
  int grid = 10;
  auto* oracle_cmd =
      app.add_subcommand("oracle-compare", "closed forms vs quadrature across all identities");
  oracle_cmd->add_option("scene", oracle_scene, "scene JSON file");
  oracle_cmd->add_option("--grid", grid, "grid points per identity")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (measure_cmd->parsed()) {
      return cmd_measure(load_scene(scene_path), method, tol, json_output);
    }
    if (cov_cmd->parsed()) {
      return cmd_check_coverage(load_scene(cov_scene), radial_steps, json_output);
    }
    if (cert_cmd->parsed()) {
      return cmd_certify(load_scene(cert_scene), theorem, cert_steps, json_output);
    }
    if (render_cmd->parsed()) {
      return cmd_render(load_scene(render_scene), out_path, resolution, certificate_path);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle_compare(load_scene(oracle_scene), grid, seed, json_output);
    }
  } catch (const scene_ns::scene_error& e) {
    std::cerr << "scene error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitInput;
}
