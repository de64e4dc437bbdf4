#include "plankcert/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace plankcert::coverage {

using geom::AngularDomain;
using geom::AnnulusConfig;
using geom::ArcIntervalSet;
using geom::kPi;
using geom::kTwoPi;
using geom::PointXY;
using geom::RegularDomain;
using geom::Strip;

std::vector<double> coverage_radii(double r, int steps) {
  if (steps < 2) throw std::invalid_argument("coverage: radial_steps must be >= 2");
  // Gap-from-boundary fractions run geometrically from almost 1 (a near-zero
  // radius) down to 1e-9, then rho = r exactly.
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(steps));
  const int interior = steps - 1;
  const double g_max = 1.0 - 1e-6;
  const double g_min = 1e-9;
  for (int i = 0; i < interior; ++i) {
    const double u = (interior == 1) ? 0.0 : static_cast<double>(i) / (interior - 1);
    const double g = g_max * std::pow(g_min / g_max, u);
    radii.push_back(r * (1.0 - g));
  }
  radii.push_back(r);
  return radii;
}

CoverageReport check_coverage(const AnnulusConfig& config,
                              std::span<const AngularDomain> domains,
                              std::span<const Strip> strips, int radial_steps) {
  const std::vector<double> radii = coverage_radii(config.r, radial_steps);

  CoverageReport report;
  report.radii_checked = 0;
  report.min_slack = 0.0;

  const PointXY center{0.0, 0.0};
  bool center_covered = false;
  for (const auto& d : domains) {
    if (contains(d, center)) { center_covered = true; break; }
  }
  if (!center_covered) {
    for (const auto& s : strips) {
      if (contains(s, center)) { center_covered = true; break; }
    }
  }

  bool failed = !center_covered;
  std::optional<PointXY> witness;
  if (failed) witness = center;

  // Scale of the inputs, for the conditioning-aware seam tolerance below.
  double geometry_scale = config.r;
  for (const auto& d : domains) geometry_scale = std::max(geometry_scale, geom::norm(d.vertex));
  for (const auto& s : strips) {
    geometry_scale = std::max({geometry_scale, std::fabs(s.offset_low), std::fabs(s.offset_high)});
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (double rho : radii) {
    ArcIntervalSet covered_arcs;
    for (const auto& d : domains) covered_arcs.add(geom::arc_intersection(d, rho));
    for (const auto& s : strips) covered_arcs.add(geom::strip_arc_intersection(s, rho));
    ++report.radii_checked;

    // Arc endpoints inherit rounding of order eps * scale / rho in angle, so
    // the seam tolerance grows accordingly at small radii (the masked runs
    // have negligible spatial extent there: rho * tol ~ eps * scale).
    const double seam_tol = std::max(
        kSeamTolerance,
        256.0 * std::numeric_limits<double>::epsilon() * (1.0 + geometry_scale / rho));
    const auto gap_list = covered_arcs.gaps(seam_tol);
    if (gap_list.empty()) continue;

    for (const auto& g : gap_list) min_gap = std::min(min_gap, g.length);
    if (!failed) {
      // Witness: midpoint of the largest gap at the first failing radius.
      const auto largest = std::max_element(
          gap_list.begin(), gap_list.end(),
          [](const auto& a, const auto& b) { return a.length < b.length; });
      const double theta = largest->start + 0.5 * largest->length;
      witness = rho * geom::unit_vector(theta);
      failed = true;
    }
  }

  report.covered = !failed;
  report.witness = failed ? witness : std::nullopt;
  report.min_slack = std::isfinite(min_gap) ? min_gap : 0.0;
  return report;
}

namespace {

// Direction of p as seen from the projected vertex, measured from the
// vertex-to-center axis; every point of T lands in [-epsilon, epsilon].
double cone_offset(PointXY p, PointXY apex, double axis_angle) {
  return geom::wrap_signed(geom::angle_of(p - apex) - axis_angle);
}

}  // namespace

RegularizationResult regularize(const AnnulusConfig& config, const AngularDomain& domain,
                                int boundary_samples) {
  const PointXY v = domain.vertex;
  const double rho_v = geom::norm(v);
  if (rho_v > config.R) {
    throw std::invalid_argument("regularize: vertex lies outside the outer circle K");
  }
  if (rho_v < config.r) {
    throw std::domain_error(
        "regularize: unsupported input, vertex strictly inside the inner circle k");
  }

  const double theta_v = (rho_v > 0.0) ? geom::angle_of(v) : 0.0;
  const PointXY apex = config.R * geom::unit_vector(theta_v);
  const double axis = geom::wrap_angle(theta_v + kPi);  // apex -> center
  const double eps = config.epsilon;

  // Direction span of domain ∩ T from the apex. Extremes occur at halfline
  // chord endpoints on k, at tangency points of k seen from the apex that lie
  // in the domain, or at the vertex itself when it sits on k.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const auto consider = [&](PointXY p) {
    const double delta = std::clamp(cone_offset(p, apex, axis), -eps, eps);
    lo = std::min(lo, delta);
    hi = std::max(hi, delta);
  };

  for (double ray : {domain.start_direction, domain.start_direction + domain.sweep}) {
    for (double s : geom::ray_circle_hits(v, ray, config.r)) {
      consider(v + s * geom::unit_vector(ray));
    }
  }
  for (PointXY q : geom::tangent_points(apex, config.r)) {
    if (contains(domain, q, 1e-12)) consider(q);
  }
  if (rho_v <= config.r && contains(domain, v)) consider(v);

  RegularizationResult result;
  result.original = domain;

  if (lo > hi) {
    // domain ∩ T is empty; the degenerate wedge suffices.
    result.regular = geom::make_regular(config, theta_v, +1, 0.0);
    result.angle_ratio = 0.0;
    result.containment_verified = true;
    return result;
  }

  // chirality +1 keeps the tangent ray at +epsilon and needs alpha = eps - lo;
  // chirality -1 keeps it at -epsilon and needs alpha = eps + hi.
  const double alpha_pos = eps - lo;
  const double alpha_neg = eps + hi;
  const int chi = (alpha_pos <= alpha_neg) ? +1 : -1;
  const double alpha = std::clamp(std::min(alpha_pos, alpha_neg), 0.0, 2.0 * eps);
  result.regular = geom::make_regular(config, theta_v, chi, alpha);
  result.angle_ratio = (domain.sweep > 0.0)
                           ? alpha / domain.sweep
                           : (alpha == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());

  // Verify containment on boundary samples of domain ∩ T: arcs of k inside the
  // domain plus the halfline chords inside T. Convexity extends the boundary
  // check to the whole intersection; the angular slack absorbs samples that
  // sit exactly on a computed edge.
  const AngularDomain wedge = result.regular.as_angular();
  constexpr double kSlack = 1e-9;
  bool ok = true;
  const int arc_samples = boundary_samples / 2;
  for (int i = 0; i < arc_samples && ok; ++i) {
    const double theta = kTwoPi * i / arc_samples;
    const PointXY p = config.r * geom::unit_vector(theta);
    if (contains(domain, p) && !contains(wedge, p, kSlack)) ok = false;
  }
  const int chord_samples = (boundary_samples - arc_samples) / 2;
  for (double ray : {domain.start_direction, domain.start_direction + domain.sweep}) {
    const auto hits = geom::ray_circle_hits(v, ray, config.r);
    double s0 = 0.0, s1 = 0.0;
    if (hits.size() == 2) {
      s0 = hits[0];
      s1 = hits[1];
    } else if (hits.size() == 1) {
      s0 = (rho_v <= config.r) ? 0.0 : hits[0];  // vertex on k: chord starts there
      s1 = hits[0];
    } else {
      continue;
    }
    for (int i = 0; i <= chord_samples && ok; ++i) {
      const double s = s0 + (s1 - s0) * i / std::max(chord_samples, 1);
      const PointXY p = v + s * geom::unit_vector(ray);
      if (!contains(wedge, p, kSlack)) ok = false;
    }
  }
  result.containment_verified = ok;
  return result;
}

StripDecomposition strip_to_regular_domains(const AnnulusConfig& config, const Strip& strip) {
  const double c1 = strip.offset_low;
  const double c2 = strip.offset_high;
  if (std::fabs(c1) >= config.R || std::fabs(c2) >= config.R) {
    throw std::invalid_argument("strip decomposition: a bounding line misses the circle K");
  }
  if (std::fabs(c1) > config.r || std::fabs(c2) > config.r) {
    throw std::invalid_argument("strip decomposition: a bounding line misses the disc T");
  }

  const PointXY n = geom::unit_vector(strip.normal_angle);
  const PointXY u = geom::unit_vector(strip.normal_angle + kPi / 2.0);
  const double s1 = std::sqrt(config.R * config.R - c1 * c1);
  const double s2 = std::sqrt(config.R * config.R - c2 * c2);

  // Chord endpoints on K: the low line meets K at B = c1*n - s1*u (and A on
  // the +u side), the high line at D = c2*n + s2*u (and C on the -u side).
  // The wedge at B (rays toward A and D) and the wedge at D (rays toward B
  // and C) split the strip along the diagonal BD, which crosses the strip
  // between the lines and passes within |offset| <= r of the center. Both
  // rays along the bounding lines and both diagonal rays meet T, so the
  // wedges are regular in the vertex-on-K sense.
  const PointXY B = c1 * n - s1 * u;
  const PointXY D = c2 * n + s2 * u;

  const double diag = std::atan2(strip.width(), s1 + s2);

  StripDecomposition out;
  out.angle_low = diag;
  out.angle_high = diag;
  // Wedge at B: ccw from ray B->D to ray B->A (along the low line, +u).
  out.wedge_low = AngularDomain::make(B, geom::angle_of(D - B), diag);
  // Wedge at D: ccw from ray D->B to ray D->C (along the high line, -u).
  out.wedge_high = AngularDomain::make(D, geom::angle_of(B - D), diag);

  out.regular_low = regularize(config, out.wedge_low).regular;
  out.regular_high = regularize(config, out.wedge_high).regular;
  return out;
}

}  // namespace plankcert::coverage
