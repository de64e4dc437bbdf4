#include "plankcert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plankcert/numerics.hpp"

namespace plankcert::certify {

using geom::AngularDomain;
using geom::AnnulusConfig;
using geom::kPi;
using geom::Strip;
using measure::Method;
using numerics::integrate;
using numerics::SingularityHint;

namespace {

double zone_area_quadrature(double a, double b) {
  // Doubled spherical area element over the strip a <= x <= b of the unit
  // disc, iterated: the inner integral over y has inverse-sqrt ends at
  // +-sqrt(1-x^2); the outer integrand is smooth (identically 2*pi).
  const auto inner = [](double x) {
    const double c2 = 1.0 - x * x;
    if (c2 <= 0.0) return 0.0;
    const double c = std::sqrt(c2);
    const auto element = [c2](double y) { return 2.0 / std::sqrt(c2 - y * y); };
    return integrate(element, -c, c, 1e-10, SingularityHint::both()).value;
  };
  return integrate(inner, a, b, 1e-9).value;
}

}  // namespace

double hatbox_zone_area(const ZoneSpec& spec, Method method) {
  if (std::fabs(spec.strip.offset_low) > 1.0 || std::fabs(spec.strip.offset_high) > 1.0) {
    throw std::invalid_argument(
        "hatbox_zone_area: a bounding line misses the unit circle (use the clipped variant)");
  }
  if (method == Method::closed_form) return 2.0 * kPi * spec.lifted_width();
  return zone_area_quadrature(spec.strip.offset_low, spec.strip.offset_high);
}

double hatbox_zone_area_clipped(const ZoneSpec& spec, Method method) {
  const double a = std::max(spec.strip.offset_low, -1.0);
  const double b = std::min(spec.strip.offset_high, 1.0);
  if (a >= b) return 0.0;
  if (method == Method::closed_form) return 2.0 * kPi * (b - a);
  return zone_area_quadrature(a, b);
}

PlankCertificate certify_plank(std::span<const Strip> strips, int radial_steps,
                               Method zone_method) {
  for (const Strip& s : strips) {
    if (std::fabs(s.offset_low) > 1.0 || std::fabs(s.offset_high) > 1.0) {
      throw std::invalid_argument("certify_plank: strip bounding lines must meet the unit disc");
    }
  }

  PlankCertificate cert;
  // The annulus parameters only set the target disc (r = 1) here; membership
  // is all the plank setting needs.
  const AnnulusConfig unit = AnnulusConfig::make(1.0, 2.0);
  cert.coverage = coverage::check_coverage(unit, {}, strips, radial_steps);

  for (const Strip& s : strips) {
    cert.sum_widths += s.width();
    cert.zone_areas.push_back(hatbox_zone_area(ZoneSpec{s}, zone_method));
  }
  cert.asserted = cert.coverage.covered;
  cert.inequality_holds =
      cert.asserted && cert.sum_widths >= cert.bound - kInequalityTolerance;
  return cert;
}

AngularCertificate certify_angular(const AnnulusConfig& config,
                                   std::span<const AngularDomain> domains,
                                   int radial_steps) {
  AngularCertificate cert;
  cert.view_angle = geom::view_angle(config);

  for (const AngularDomain& d : domains) {
    if (geom::norm(d.vertex) > config.R) {
      throw std::invalid_argument("certify_angular: every vertex must lie within K");
    }
  }
  for (const AngularDomain& d : domains) {
    cert.regularizations.push_back(coverage::regularize(config, d));
  }

  cert.coverage = coverage::check_coverage(config, domains, {}, radial_steps);

  for (const AngularDomain& d : domains) {
    cert.sum_angles += d.sweep;
    cert.domain_measures.push_back(
        measure::mu_region(config, measure::profile_of(d)));
    cert.sum_measures += cert.domain_measures.back().value;
  }

  cert.slack = cert.sum_angles - cert.view_angle;
  cert.asserted = cert.coverage.covered;
  cert.inequality_holds = cert.asserted && cert.slack >= -kInequalityTolerance;
  cert.mu_chain_holds = cert.asserted && cert.sum_measures >= cert.view_angle - 1e-6;
  return cert;
}

std::vector<LimitRow> limit_derivation_check(std::span<const double> strip_widths,
                                             std::span<const double> R_values) {
  if (strip_widths.empty()) {
    throw std::invalid_argument("limit_derivation_check: empty width family");
  }
  double sum_widths = 0.0;
  for (double w : strip_widths) {
    if (!(w > 0.0)) throw std::invalid_argument("limit_derivation_check: widths must be > 0");
    sum_widths += w;
  }
  if (sum_widths < 2.0 - kInequalityTolerance) {
    throw std::invalid_argument("limit_derivation_check: widths cannot cover the unit disc");
  }

  // Tile [-1, 1] with consecutive strips normal to the x axis; offsets are
  // clamped so every bounding line meets the disc.
  std::vector<Strip> strips;
  double cursor = -1.0;
  for (double w : strip_widths) {
    const double lo = cursor;
    const double hi = std::min(lo + w, 1.0);
    cursor = hi;
    if (hi > lo) strips.push_back(Strip::make(0.0, lo, hi));
  }

  std::vector<LimitRow> table;
  for (double R : R_values) {
    if (R < 2.0) {
      throw std::invalid_argument("limit_derivation_check: needs R >= 2");
    }
    const AnnulusConfig config = AnnulusConfig::make(1.0, R);
    LimitRow row;
    row.R = R;
    row.width_term = 2.0 * sum_widths / (2.0 * R - 2.0);
    for (const Strip& s : strips) {
      const auto decomp = coverage::strip_to_regular_domains(config, s);
      row.wedge_angle_sum += decomp.angle_low + decomp.angle_high;
    }
    row.two_epsilon = 2.0 * std::asin(1.0 / R);
    row.two_sin_epsilon = 2.0 / R;
    row.link_widths_ge_angles =
        row.width_term >= row.wedge_angle_sum - kInequalityTolerance;
    row.link_angles_ge_view =
        row.wedge_angle_sum >= row.two_epsilon - kInequalityTolerance;
    row.link_view_ge_sine =
        row.two_epsilon >= row.two_sin_epsilon - kInequalityTolerance;
    row.implied_lower_bound = (2.0 * R - 2.0) / R;
    table.push_back(row);
  }
  return table;
}

}  // namespace plankcert::certify
