#ifndef PLANKCERT_NUMERICS_HPP
#define PLANKCERT_NUMERICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

// Adaptive one-dimensional quadrature with explicit handling of inverse
// square root endpoint singularities. This is the independent oracle used to
// validate every closed-form measure identity, so it deliberately shares no
// code with the closed forms.
//
// Scheme: Gauss-Kronrod 7/15 pairs on a globally refined segment heap. An
// inverse_sqrt hint at an endpoint is removed before refinement by the
// substitution x = a + (b-a)*s^2 (lower) or x = b - (b-a)*s^2 (upper), which
// turns any half-power endpoint behavior into a smooth integrand in s.

namespace plankcert::numerics {

enum class EndpointBehavior { none, inverse_sqrt };

struct SingularityHint {
  EndpointBehavior at_lower = EndpointBehavior::none;
  EndpointBehavior at_upper = EndpointBehavior::none;

  static SingularityHint none() { return {}; }
  static SingularityHint lower() { return {EndpointBehavior::inverse_sqrt, EndpointBehavior::none}; }
  static SingularityHint upper() { return {EndpointBehavior::none, EndpointBehavior::inverse_sqrt}; }
  static SingularityHint both() {
    return {EndpointBehavior::inverse_sqrt, EndpointBehavior::inverse_sqrt};
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;   // >= 0; conservative bound, see integrate()
  std::int64_t evaluations = 0;  // >= 1
};

/// Thrown on a non-finite integrand sample (carries the abscissa) or when the
/// evaluation budget runs out (carries the partial result).
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& message, QuadratureResult partial,
                   std::optional<double> where)
      : std::runtime_error(message), partial_(partial), where_(where) {}

  const QuadratureResult& partial() const { return partial_; }
  std::optional<double> where() const { return where_; }

 private:
  QuadratureResult partial_;
  std::optional<double> where_;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::int64_t kDefaultEvaluationCap = 1'000'000;

/// Approximate the integral of f over [a, b] to absolute tolerance tol.
/// The returned error_estimate is the sum of Kronrod-Gauss differences over
/// all segments (floored at rounding level); the true error is bounded by
/// max(tol, error_estimate) for integrands whose only non-smoothness matches
/// the hint.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = kDefaultTol,
                           SingularityHint hint = SingularityHint::none(),
                           std::int64_t max_evaluations = kDefaultEvaluationCap);

}  // namespace plankcert::numerics

#endif  // PLANKCERT_NUMERICS_HPP
