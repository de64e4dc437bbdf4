#ifndef PLANKCERT_COVERAGE_HPP
#define PLANKCERT_COVERAGE_HPP

#include <optional>
#include <span>
#include <vector>

#include "plankcert/geom.hpp"

// Coverage certification for the closed disc T of radius r: exact arc-union
// arithmetic at each sampled radius, dense radial sampling concentrated near
// the boundary (where wedge coverings are tightest), plus the reductions that
// turn arbitrary vertices into regular domains and strips into wedge pairs.

namespace plankcert::coverage {

/// Absolute angular tolerance used when deciding that a union of arcs closes
/// up; absorbs floating-point seams between arcs that meet exactly.
inline constexpr double kSeamTolerance = 1e-12;

inline constexpr int kDefaultRadialSteps = 512;

struct CoverageReport {
  bool covered = false;
  /// A point of T outside every input set; present iff not covered.
  std::optional<geom::PointXY> witness;
  int radii_checked = 0;
  /// Smallest uncovered angular run (above the seam tolerance) seen at any
  /// checked radius; 0 when every radius was fully covered.
  double min_slack = 0.0;
};

/// Grid-certified coverage check of the disc of radius config.r by the given
/// wedges and strips: the center is tested by direct containment, and at each
/// grid radius (including rho = r and a near-zero radius, geometrically
/// concentrated toward r) the exact union of all arc intersections must close
/// the circle. Exact per radius, sampled across radii. The witness is the
/// midpoint of the largest gap at the first failing radius.
CoverageReport check_coverage(const geom::AnnulusConfig& config,
                              std::span<const geom::AngularDomain> domains,
                              std::span<const geom::Strip> strips,
                              int radial_steps = kDefaultRadialSteps);

/// The radius grid used by check_coverage, ascending, last element == r.
std::vector<double> coverage_radii(double r, int steps);

struct RegularizationResult {
  geom::AngularDomain original;
  geom::RegularDomain regular;
  /// regular.alpha / original.sweep; can exceed 1 (reported, never assumed).
  double angle_ratio = 0.0;
  bool containment_verified = false;
};

/// Minimal regular domain containing original ∩ T whose vertex is the radial
/// projection of the original vertex onto K. Preconditions: vertex within the
/// closed disc of radius R (else std::invalid_argument) and not strictly
/// inside k (else std::domain_error: the tangent construction has no limit
/// there). Containment is verified on boundary samples of original ∩ T.
RegularizationResult regularize(const geom::AnnulusConfig& config,
                                const geom::AngularDomain& domain,
                                int boundary_samples = 10'000);

struct StripDecomposition {
  /// The two chord-endpoint wedges; vertices on K, both halflines meet k.
  geom::AngularDomain wedge_low;   // vertex on the offset_low line
  geom::AngularDomain wedge_high;  // vertex on the offset_high line
  /// Opening angles of the wedges: arctan(width / (s_low + s_high)) with
  /// s_i the chord half-lengths on K. Always equal for the two wedges.
  double angle_low = 0.0;
  double angle_high = 0.0;
  /// The wedges regularized into tangent form (what the measure machinery
  /// consumes); their alphas can exceed the raw wedge angles.
  geom::RegularDomain regular_low;
  geom::RegularDomain regular_high;
};

/// Decompose a strip into two wedges with vertices at chord endpoints of its
/// bounding lines on K, whose union covers the whole strip (hence strip ∩ T).
/// Preconditions: both bounding lines meet K properly (|offset| < R) and the
/// closed disc r (|offset| <= r); violations raise std::invalid_argument.
StripDecomposition strip_to_regular_domains(const geom::AnnulusConfig& config,
                                            const geom::Strip& strip);

}  // namespace plankcert::coverage

#endif  // PLANKCERT_COVERAGE_HPP
