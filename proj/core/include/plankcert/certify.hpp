#ifndef PLANKCERT_CERTIFY_HPP
#define PLANKCERT_CERTIFY_HPP

#include <span>
#include <vector>

#include "plankcert/coverage.hpp"
#include "plankcert/geom.hpp"
#include "plankcert/measure.hpp"

// End-to-end certification of the two covering inequalities on the disc:
//  - angular: a covering of T by angular domains with vertices within K has
//    angle sum at least the view angle 2*arcsin(r/R);
//  - plank: a covering of the unit disc by strips has width sum at least 2,
//    derived through the sphere-zone (hat-box) areas 2*pi*d.
// When the coverage check fails, the inequalities are reported as not
// asserted rather than violated: the theorems are conditional on covering.

namespace plankcert::certify {

/// Slack below which the inequalities count as satisfied (exact equality
/// families land at 0 up to rounding).
inline constexpr double kInequalityTolerance = 1e-12;

struct AngularCertificate {
  double sum_angles = 0.0;  // original (pre-regularization) opening angles
  double view_angle = 0.0;  // 2*arcsin(r/R)
  coverage::CoverageReport coverage;
  bool inequality_holds = false;  // sum_angles >= view_angle - tol
  double slack = 0.0;             // sum_angles - view_angle
  /// False when the coverage check failed; the verdict is then vacuous.
  bool asserted = false;

  // One-line-proof diagnostics: sum(alpha_i) = sum(mu(D_i ∩ T)) >= mu(T).
  std::vector<measure::MeasureResult> domain_measures;
  double sum_measures = 0.0;
  bool mu_chain_holds = false;  // sum_measures >= view_angle - 1e-6 when covered
  std::vector<coverage::RegularizationResult> regularizations;
};

struct ZoneSpec {
  geom::Strip strip;  // in the plane z = 0
  /// Width of the 3-D slab lifted from the strip (equal by construction).
  double lifted_width() const { return strip.width(); }
};

struct PlankCertificate {
  double sum_widths = 0.0;
  double bound = 2.0;  // minimal width of the unit disc
  std::vector<double> zone_areas;
  coverage::CoverageReport coverage;
  bool inequality_holds = false;  // sum_widths >= 2 - tol
  bool asserted = false;          // false when not covered (vacuous)
};

/// Area of the unit-sphere zone cut by the lifted slab. The closed form is
/// 2*pi*width; the quadrature route integrates the doubled spherical area
/// element 2/sqrt(1 - x^2 - y^2) over strip ∩ unit disc as iterated 1-D
/// integrals with inverse-sqrt hints. Precondition: both bounding lines meet
/// the unit circle (|offset| <= 1).
double hatbox_zone_area(const ZoneSpec& spec, measure::Method method);

/// Variant accepting any strip; uses the width of slab ∩ [-1, 1].
double hatbox_zone_area_clipped(const ZoneSpec& spec, measure::Method method);

/// Certify the plank bound on the unit disc. Zone areas are computed by
/// quadrature so the certificate carries an independent verification of the
/// 2*pi*d identity.
PlankCertificate certify_plank(std::span<const geom::Strip> strips,
                               int radial_steps = coverage::kDefaultRadialSteps,
                               measure::Method zone_method = measure::Method::quadrature);

/// Certify the angular-domain bound: regularizes every domain (diagnostics
/// only), checks coverage with the original domains, sums the original
/// angles, and evaluates each mu(D_i ∩ T) by quadrature for the measure
/// chain. Vertices must lie within K.
AngularCertificate certify_angular(const geom::AnnulusConfig& config,
                                   std::span<const geom::AngularDomain> domains,
                                   int radial_steps = coverage::kDefaultRadialSteps);

struct LimitRow {
  double R = 0.0;
  double width_term = 0.0;       // 2 * sum(d_i) / (2R - 2)
  double wedge_angle_sum = 0.0;  // sum over strips of both decomposition angles
  double two_epsilon = 0.0;      // 2*arcsin(1/R)
  double two_sin_epsilon = 0.0;  // 2/R
  bool link_widths_ge_angles = false;
  bool link_angles_ge_view = false;
  bool link_view_ge_sine = false;
  double implied_lower_bound = 0.0;  // (2R - 2)/R, the bound on sum(d_i)
};

/// Evaluate the limit chain 2*sum(d)/(2R-2) >= sum(angles) >= 2*eps >= 2/R
/// for a family of strip widths tiling [-1, 1] (a covering of the unit disc),
/// one row per R. Rejects R < 2 and width families with sum < 2.
std::vector<LimitRow> limit_derivation_check(std::span<const double> strip_widths,
                                             std::span<const double> R_values);

}  // namespace plankcert::certify

#endif  // PLANKCERT_CERTIFY_HPP
