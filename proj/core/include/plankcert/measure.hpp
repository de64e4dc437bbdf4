#ifndef PLANKCERT_MEASURE_HPP
#define PLANKCERT_MEASURE_HPP

#include <functional>
#include <vector>

#include "plankcert/geom.hpp"
#include "plankcert/numerics.hpp"

// The rotation-invariant weight measure mu on the closed disc T of radius r:
//
//   mu(S) = integral over S of F(P) dP,
//   F(P) = f(rho) = (1/pi) * 1/(R^2 - rho^2) * sqrt((R^2 - r^2)/(r^2 - rho^2)),
//
// normalized so that every regular angular domain measures exactly its
// opening angle, and mu(T) equals the view angle 2*arcsin(r/R). Every closed
// form here is paired with a quadrature route through the numerics module so
// the two can certify each other.

namespace plankcert::measure {

enum class Method { closed_form, quadrature };

struct MeasureResult {
  double value = 0.0;  // radians, >= 0
  Method method = Method::closed_form;
  double error_estimate = 0.0;
};

/// Region of T described by its angular cross-section at each radius in (0, r].
using RadialProfile = std::function<geom::ArcIntervalSet(double)>;

/// Weight density f(rho). Domain: 0 <= rho < r (singular at rho = r).
double density(const geom::AnnulusConfig& config, double rho);

/// Antiderivative of 2 f(rho) rho / sqrt(rho^2 - t^2) in rho:
///   G(rho, t) = (2/pi) (R^2-t^2)^{-1/2}
///               * arctan sqrt( (R^2-r^2)/(R^2-t^2) * (rho^2-t^2)/(r^2-rho^2) ).
/// Domain: |t| <= rho <= r, |t| < r. G(t, t) = 0; at rho = r the analytic
/// limit (R^2-t^2)^{-1/2} is returned instead of the singular expression.
double antiderivative_G(const geom::AnnulusConfig& config, double rho, double t);

/// The radial identity: integral over rho in (|t|, r) of
/// 2 f(rho) rho / sqrt(rho^2 - t^2) equals 1/sqrt(R^2 - t^2) for |t| < r.
/// (Even in t, so the signed-distance substitution needs no case split.)
MeasureResult radial_profile_integral(const geom::AnnulusConfig& config, double t,
                                      Method method);

/// mu of a regular domain intersected with T. The closed form routes through
/// the substitution t = R sin(epsilon - alpha) and returns
/// epsilon - arcsin(t/R) (= alpha). The quadrature route evaluates the
/// successive-integration form int 2 f(rho) rho arccos(d/rho) drho, splitting
/// the range at rho = |d| when d < 0 where the cross-section is a full circle.
MeasureResult mu_regular(const geom::AnnulusConfig& config,
                         const geom::RegularDomain& domain, Method method);

/// mu of an arbitrary region given by its radial profile: integrates
/// f(rho) * rho * (total cross-section angle at rho) over (0, r) with an
/// inverse-sqrt hint at the singular upper endpoint.
MeasureResult mu_region(const geom::AnnulusConfig& config, const RadialProfile& profile,
                        double radial_tol = 1e-9);

/// mu(T): the view angle 2*arcsin(r/R).
double mu_disc(const geom::AnnulusConfig& config);

// Profile builders for the regions this project actually measures.
RadialProfile profile_of(const geom::AngularDomain& domain);
RadialProfile profile_of(const geom::Strip& strip);
RadialProfile profile_union(std::vector<geom::AngularDomain> domains,
                            std::vector<geom::Strip> strips);
RadialProfile full_disc_profile();
/// Same cross-sections rotated by a fixed angle (mu is rotation invariant).
RadialProfile rotated(RadialProfile profile, double angle);

}  // namespace plankcert::measure

#endif  // PLANKCERT_MEASURE_HPP
