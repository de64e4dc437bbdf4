#ifndef PLANKCERT_GEOM_HPP
#define PLANKCERT_GEOM_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

// Planar primitives shared by every other module: the concentric-circle
// configuration, angular domains (convex wedges), strips, and the circle-arc
// interval sets used for exact per-radius coverage arithmetic.
//
// Conventions: the common center O is pinned at the origin, angles are in
// radians, and arc intervals are normalized to [0, 2*pi).

namespace plankcert::geom {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct PointXY {
  double x = 0.0;
  double y = 0.0;
};

inline PointXY operator+(PointXY a, PointXY b) { return {a.x + b.x, a.y + b.y}; }
inline PointXY operator-(PointXY a, PointXY b) { return {a.x - b.x, a.y - b.y}; }
inline PointXY operator*(double s, PointXY p) { return {s * p.x, s * p.y}; }
inline double dot(PointXY a, PointXY b) { return a.x * b.x + a.y * b.y; }
inline double cross(PointXY a, PointXY b) { return a.x * b.y - a.y * b.x; }
inline double norm(PointXY p) { return std::hypot(p.x, p.y); }
inline double angle_of(PointXY p) { return std::atan2(p.y, p.x); }
inline PointXY unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Reduce an angle to [0, 2*pi).
double wrap_angle(double a);
/// Reduce an angle to (-pi, pi].
double wrap_signed(double a);

// ---------------------------------------------------------------------------
// Annulus configuration
// ---------------------------------------------------------------------------

/// Two concentric circles k (radius r) and K (radius R), r < R, centered at
/// the origin. epsilon = arcsin(r/R) is the half view angle of k from K.
struct AnnulusConfig {
  double r = 1.0;
  double R = 2.0;
  double epsilon = 0.0;  // derived: arcsin(r/R)

  static AnnulusConfig make(double r, double R);
};

/// Angle subtended by circle k from any point of circle K: 2*arcsin(r/R).
double view_angle(const AnnulusConfig& config);

// ---------------------------------------------------------------------------
// Angular domains
// ---------------------------------------------------------------------------

/// Closed convex wedge: vertex plus the directions
/// [start_direction, start_direction + sweep], sweep in [0, pi].
struct AngularDomain {
  PointXY vertex;
  double start_direction = 0.0;  // radians, normalized to [0, 2*pi)
  double sweep = 0.0;            // radians, counterclockwise, [0, pi]

  static AngularDomain make(PointXY vertex, double start_direction, double sweep);
};

/// Wedge with vertex on K whose leading halfline is tangent to k, parametrized
/// by vertex position, tangency side and opening angle. The non-tangent
/// halfline sits at signed distance R*sin(epsilon - alpha) from the center.
struct RegularDomain {
  AnnulusConfig config;
  double vertex_angle = 0.0;  // vertex A = R * (cos, sin)(vertex_angle)
  int chirality = +1;         // +1: tangent ray on the ccw side of A->O
  double alpha = 0.0;         // opening angle, [0, 2*epsilon]

  PointXY vertex() const;
  /// Direction angle of the tangent bounding halfline.
  double tangent_ray_angle() const;
  /// Direction angle of the other bounding halfline.
  double far_ray_angle() const;
  /// Point where the tangent halfline touches circle k.
  PointXY tangent_point() const;
  AngularDomain as_angular() const;
};

/// Build a regular domain; throws std::domain_error if alpha is outside
/// [0, 2*epsilon] or chirality is not +-1.
RegularDomain make_regular(const AnnulusConfig& config, double vertex_angle,
                           int chirality, double alpha);

/// Signed distance of the non-tangent halfline from the center: positive iff
/// the center lies outside the domain. Equals R*sin(epsilon - alpha).
double signed_distance(const AnnulusConfig& config, const RegularDomain& domain);

/// Closed-set membership test for the wedge.
bool contains(const AngularDomain& domain, PointXY p);
/// Membership with an angular slack, for verifying points that sit on a
/// boundary computed through floating point.
bool contains(const AngularDomain& domain, PointXY p, double angular_slack);

// ---------------------------------------------------------------------------
// Strips
// ---------------------------------------------------------------------------

/// Closed region between two parallel lines:
/// offset_low <= <p, (cos, sin)(normal_angle)> <= offset_high.
struct Strip {
  double normal_angle = 0.0;
  double offset_low = 0.0;
  double offset_high = 0.0;

  double width() const { return offset_high - offset_low; }
  static Strip make(double normal_angle, double offset_low, double offset_high);
};

bool contains(const Strip& strip, PointXY p);

// ---------------------------------------------------------------------------
// Arc interval sets
// ---------------------------------------------------------------------------

/// Union of closed angle intervals on the circle, kept sorted, disjoint and
/// normalized into [0, 2*pi] (an interval may end exactly at 2*pi; wraparound
/// adjacency is handled by the circular queries below).
class ArcIntervalSet {
 public:
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;  // lo <= hi <= 2*pi
  };
  struct Gap {
    double start = 0.0;   // angle where the uncovered run begins
    double length = 0.0;  // radians
  };

  ArcIntervalSet() = default;
  static ArcIntervalSet empty_set() { return {}; }
  static ArcIntervalSet full_circle();
  /// Single interval [lo, hi] given in arbitrary radians, hi >= lo.
  /// Spans of length >= 2*pi collapse to the full circle.
  static ArcIntervalSet of(double lo, double hi);

  void add(double lo, double hi);
  void add(const ArcIntervalSet& other);
  ArcIntervalSet united(const ArcIntervalSet& other) const;
  ArcIntervalSet intersected(const ArcIntervalSet& other) const;

  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& intervals() const { return parts_; }
  double total_length() const;

  bool contains_angle(double theta) const;
  /// Circular distance from theta to the nearest interval endpoint; large when
  /// the set is empty or full. Used by tests to skip seam-ambiguous samples.
  double boundary_distance(double theta) const;

  /// Uncovered runs of the circle longer than min_length, in circular order.
  std::vector<Gap> gaps(double min_length = 0.0) const;
  /// True when the complement has no run longer than tol.
  bool covers_circle(double tol) const;

 private:
  std::vector<Interval> parts_;
  void insert_normalized(double lo, double hi);
  void merge();
};

/// Angles theta with radius*(cos,sin)(theta) inside the closed halfplane
/// { p : <p, (cos,sin)(normal_angle)> >= offset }.
///
/// offset_slack (length units) snaps near-tangent lines onto exact tangency:
/// offset <= -(radius - slack) counts as the full circle and
/// offset in [radius - slack, radius + slack] as the single tangency point.
/// Without it, an offset off by one ulp near +-radius turns into a spurious
/// arc hole of order sqrt(ulp) through the acos.
ArcIntervalSet halfplane_arc(double normal_angle, double offset, double radius,
                             double offset_slack = 0.0);

/// Angles of the circle of given radius (centered at O) lying in the wedge.
/// At most two disjoint intervals; endpoints are exact halfline-circle
/// intersections.
ArcIntervalSet arc_intersection(const AngularDomain& domain, double radius);

/// Angles of the circle of given radius lying inside the strip.
ArcIntervalSet strip_arc_intersection(const Strip& strip, double radius);

// ---------------------------------------------------------------------------
// Small circle/ray helpers (used by coverage and tests)
// ---------------------------------------------------------------------------

/// Parameters s >= 0 with |origin + s*dir| = radius, ascending. dir is a unit
/// vector given by its angle.
std::vector<double> ray_circle_hits(PointXY origin, double dir_angle, double radius);

/// Tangency points on the circle |q| = radius as seen from p (|p| >= radius).
/// For |p| == radius both points coincide with p (tangent line perpendicular
/// to the radius).
std::array<PointXY, 2> tangent_points(PointXY p, double radius);

}  // namespace plankcert::geom

#endif  // PLANKCERT_GEOM_HPP
