#include "plankcert/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace plankcert::measure {

using geom::AnnulusConfig;
using geom::kPi;
using geom::kTwoPi;
using numerics::integrate;
using numerics::QuadratureResult;
using numerics::SingularityHint;

namespace {

// Quadrature tolerance for the measure identities. Tight enough that the
// certified comparisons (1e-7 .. 1e-8) are limited by the identities, not by
// the integrator.
constexpr double kMuQuadTol = 1e-10;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

double density(const AnnulusConfig& config, double rho) {
  if (!(rho >= 0.0) || rho >= config.r) {
    throw std::domain_error("density: rho must lie in [0, r); f is singular at rho = r");
  }
  const double R2 = config.R * config.R;
  const double r2 = config.r * config.r;
  return (1.0 / kPi) * (1.0 / (R2 - rho * rho)) * std::sqrt((R2 - r2) / (r2 - rho * rho));
}

double antiderivative_G(const AnnulusConfig& config, double rho, double t) {
  const double at = std::fabs(t);
  if (!(at < config.r)) throw std::domain_error("antiderivative_G: need |t| < r");
  if (!(rho >= at) || !(rho <= config.r)) {
    throw std::domain_error("antiderivative_G: need |t| <= rho <= r");
  }
  const double R2 = config.R * config.R;
  const double r2 = config.r * config.r;
  const double outer = (2.0 / kPi) / std::sqrt(R2 - t * t);
  if (rho == config.r) {
    // arctan argument diverges; arctan -> pi/2.
    return outer * (kPi / 2.0);
  }
  const double arg = ((R2 - r2) / (R2 - t * t)) * ((rho * rho - t * t) / (r2 - rho * rho));
  return outer * std::atan(std::sqrt(arg));
}

MeasureResult radial_profile_integral(const AnnulusConfig& config, double t, Method method) {
  const double at = std::fabs(t);
  if (!(at < config.r)) throw std::domain_error("radial_profile_integral: need |t| < r");
  if (method == Method::closed_form) {
    return {1.0 / std::sqrt(config.R * config.R - t * t), Method::closed_form, 0.0};
  }
  const double t2 = t * t;
  const auto integrand = [&config, t2](double rho) {
    return 2.0 * density(config, rho) * rho / std::sqrt(rho * rho - t2);
  };
  // Inverse-sqrt at rho = |t| (for t != 0) and at rho = r; the substitution is
  // harmless when the lower endpoint is actually smooth (t == 0).
  const QuadratureResult q = integrate(integrand, at, config.r, kMuQuadTol,
                                       SingularityHint::both());
  return {q.value, Method::quadrature, q.error_estimate};
}

MeasureResult mu_regular(const AnnulusConfig& config, const geom::RegularDomain& domain,
                         Method method) {
  const double eps = config.epsilon;
  const double alpha = domain.alpha;
  if (method == Method::closed_form) {
    // Substitution path: t = R sin(eps - alpha), mu = eps - arcsin(t/R).
    const double t = config.R * std::sin(eps - alpha);
    return {eps - std::asin(clamp_unit(t / config.R)), Method::closed_form, 0.0};
  }

  // The derived distance lies in [-r, r] by the domain invariant; clamp away
  // the last-ulp excursions of R*sin(eps - alpha) so the integration bounds
  // stay inside the density's domain.
  const double d = std::clamp(config.R * std::sin(eps - alpha), -config.r, config.r);
  if (alpha == 0.0) {
    return {0.0, Method::quadrature, 0.0};  // degenerate ray, empty interior
  }
  const auto wedge_part = [&config, d](double rho) {
    return 2.0 * density(config, rho) * rho * std::acos(clamp_unit(d / rho));
  };

  if (d >= 0.0) {
    if (d >= config.r) return {0.0, Method::quadrature, 0.0};
    const QuadratureResult q =
        integrate(wedge_part, d, config.r, kMuQuadTol, SingularityHint::both());
    return {q.value, Method::quadrature, q.error_estimate};
  }

  // Center inside the domain: full circles below rho = |d|, arccos form
  // above. At alpha = 2*epsilon the arccos piece is empty and mu is the whole
  // disc integral.
  const double c = -d;
  const auto full_part = [&config](double rho) {
    return kTwoPi * density(config, rho) * rho;
  };
  const QuadratureResult inner =
      integrate(full_part, 0.0, c, 0.5 * kMuQuadTol, SingularityHint::upper());
  if (c >= config.r) {
    return {inner.value, Method::quadrature, inner.error_estimate};
  }
  const QuadratureResult outer =
      integrate(wedge_part, c, config.r, 0.5 * kMuQuadTol, SingularityHint::both());
  return {inner.value + outer.value, Method::quadrature,
          inner.error_estimate + outer.error_estimate};
}

MeasureResult mu_region(const AnnulusConfig& config, const RadialProfile& profile,
                        double radial_tol) {
  if (!(radial_tol > 0.0)) throw std::invalid_argument("mu_region: radial_tol must be > 0");
  const auto integrand = [&config, &profile](double rho) {
    const double angle = profile(rho).total_length();
    return density(config, rho) * rho * angle;
  };
  const QuadratureResult q =
      integrate(integrand, 0.0, config.r, radial_tol, SingularityHint::upper());
  return {q.value, Method::quadrature, q.error_estimate};
}

double mu_disc(const AnnulusConfig& config) { return 2.0 * config.epsilon; }

RadialProfile profile_of(const geom::AngularDomain& domain) {
  return [domain](double rho) { return geom::arc_intersection(domain, rho); };
}

RadialProfile profile_of(const geom::Strip& strip) {
  return [strip](double rho) { return geom::strip_arc_intersection(strip, rho); };
}

RadialProfile profile_union(std::vector<geom::AngularDomain> domains,
                            std::vector<geom::Strip> strips) {
  return [domains = std::move(domains), strips = std::move(strips)](double rho) {
    geom::ArcIntervalSet set;
    for (const auto& d : domains) set.add(geom::arc_intersection(d, rho));
    for (const auto& s : strips) set.add(geom::strip_arc_intersection(s, rho));
    return set;
  };
}

RadialProfile full_disc_profile() {
  return [](double) { return geom::ArcIntervalSet::full_circle(); };
}

RadialProfile rotated(RadialProfile profile, double angle) {
  return [profile = std::move(profile), angle](double rho) {
    geom::ArcIntervalSet out;
    for (const auto& iv : profile(rho).intervals()) {
      out.add(iv.lo + angle, iv.hi + angle);
    }
    return out;
  };
}

}  // namespace plankcert::measure
