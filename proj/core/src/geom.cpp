#include "plankcert/geom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace plankcert::geom {

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod of values barely below a multiple of 2*pi
  return w;
}

double wrap_signed(double a) {
  double w = wrap_angle(a);
  return (w > kPi) ? w - kTwoPi : w;
}

// ---------------------------------------------------------------------------
// AnnulusConfig
// ---------------------------------------------------------------------------

AnnulusConfig AnnulusConfig::make(double r, double R) {
  if (!(std::isfinite(r) && std::isfinite(R))) {
    throw std::invalid_argument("annulus: radii must be finite");
  }
  if (!(r > 0.0)) throw std::invalid_argument("annulus: inner radius r must be > 0");
  if (!(r < R)) throw std::invalid_argument("annulus: need r < R");
  AnnulusConfig c;
  c.r = r;
  c.R = R;
  c.epsilon = std::asin(r / R);
  return c;
}

double view_angle(const AnnulusConfig& config) { return 2.0 * config.epsilon; }

// ---------------------------------------------------------------------------
// AngularDomain
// ---------------------------------------------------------------------------

AngularDomain AngularDomain::make(PointXY vertex, double start_direction, double sweep) {
  if (!(std::isfinite(vertex.x) && std::isfinite(vertex.y))) {
    throw std::invalid_argument("angular domain: vertex must be finite");
  }
  if (!std::isfinite(start_direction) || !std::isfinite(sweep)) {
    throw std::invalid_argument("angular domain: angles must be finite");
  }
  if (sweep < 0.0 || sweep > kPi) {
    throw std::domain_error("angular domain: sweep must lie in [0, pi]");
  }
  AngularDomain d;
  d.vertex = vertex;
  d.start_direction = wrap_angle(start_direction);
  d.sweep = sweep;
  return d;
}

bool contains(const AngularDomain& domain, PointXY p) {
  return contains(domain, p, 0.0);
}

bool contains(const AngularDomain& domain, PointXY p, double angular_slack) {
  const PointXY w = p - domain.vertex;
  if (w.x == 0.0 && w.y == 0.0) return true;  // closed set: vertex included
  const double delta = wrap_angle(angle_of(w) - domain.start_direction);
  return delta <= domain.sweep + angular_slack || delta >= kTwoPi - angular_slack;
}

// ---------------------------------------------------------------------------
// RegularDomain
// ---------------------------------------------------------------------------

PointXY RegularDomain::vertex() const { return config.R * unit_vector(vertex_angle); }

double RegularDomain::tangent_ray_angle() const {
  return wrap_angle(vertex_angle + kPi + chirality * config.epsilon);
}

double RegularDomain::far_ray_angle() const {
  return wrap_angle(vertex_angle + kPi + chirality * (config.epsilon - alpha));
}

PointXY RegularDomain::tangent_point() const {
  // Tangent length from a point of K to k is R*cos(epsilon).
  return vertex() + (config.R * std::cos(config.epsilon)) * unit_vector(tangent_ray_angle());
}

AngularDomain RegularDomain::as_angular() const {
  const double start = (chirality > 0) ? far_ray_angle() : tangent_ray_angle();
  return AngularDomain::make(vertex(), start, alpha);
}

RegularDomain make_regular(const AnnulusConfig& config, double vertex_angle,
                           int chirality, double alpha) {
  if (chirality != 1 && chirality != -1) {
    throw std::invalid_argument("regular domain: chirality must be +1 or -1");
  }
  if (!std::isfinite(vertex_angle) || !std::isfinite(alpha)) {
    throw std::invalid_argument("regular domain: angles must be finite");
  }
  if (alpha < 0.0 || alpha > 2.0 * config.epsilon) {
    throw std::domain_error("regular domain: alpha must lie in [0, 2*epsilon]");
  }
  RegularDomain d;
  d.config = config;
  d.vertex_angle = wrap_angle(vertex_angle);
  d.chirality = chirality;
  d.alpha = alpha;
  return d;
}

double signed_distance(const AnnulusConfig& config, const RegularDomain& domain) {
  return config.R * std::sin(config.epsilon - domain.alpha);
}

// ---------------------------------------------------------------------------
// Strip
// ---------------------------------------------------------------------------

Strip Strip::make(double normal_angle, double offset_low, double offset_high) {
  if (!std::isfinite(normal_angle) || !std::isfinite(offset_low) || !std::isfinite(offset_high)) {
    throw std::invalid_argument("strip: parameters must be finite");
  }
  if (offset_low > offset_high) {
    throw std::invalid_argument("strip: offset_low must not exceed offset_high");
  }
  return Strip{normal_angle, offset_low, offset_high};
}

bool contains(const Strip& strip, PointXY p) {
  const double t = dot(p, unit_vector(strip.normal_angle));
  return t >= strip.offset_low && t <= strip.offset_high;
}

// ---------------------------------------------------------------------------
// ArcIntervalSet
// ---------------------------------------------------------------------------

ArcIntervalSet ArcIntervalSet::full_circle() {
  ArcIntervalSet s;
  s.parts_.push_back({0.0, kTwoPi});
  return s;
}

ArcIntervalSet ArcIntervalSet::of(double lo, double hi) {
  ArcIntervalSet s;
  s.add(lo, hi);
  return s;
}

void ArcIntervalSet::insert_normalized(double lo, double hi) {
  // lo in [0, 2*pi); hi - lo <= 2*pi. Split pieces that cross the seam.
  if (hi <= kTwoPi) {
    parts_.push_back({lo, hi});
  } else {
    parts_.push_back({lo, kTwoPi});
    parts_.push_back({0.0, hi - kTwoPi});
  }
}

void ArcIntervalSet::add(double lo, double hi) {
  if (!(hi >= lo)) throw std::invalid_argument("arc interval: need hi >= lo");
  if (hi - lo >= kTwoPi) {
    parts_.assign(1, {0.0, kTwoPi});
    return;
  }
  const double base = wrap_angle(lo);
  insert_normalized(base, base + (hi - lo));
  merge();
}

void ArcIntervalSet::add(const ArcIntervalSet& other) {
  parts_.insert(parts_.end(), other.parts_.begin(), other.parts_.end());
  merge();
}

ArcIntervalSet ArcIntervalSet::united(const ArcIntervalSet& other) const {
  ArcIntervalSet s = *this;
  s.add(other);
  return s;
}

ArcIntervalSet ArcIntervalSet::intersected(const ArcIntervalSet& other) const {
  // Normalized pieces are plain subsets of [0, 2*pi], so flat pairwise
  // clipping is exact.
  ArcIntervalSet out;
  for (const Interval& a : parts_) {
    for (const Interval& b : other.parts_) {
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (lo <= hi) out.parts_.push_back({lo, hi});
    }
  }
  out.merge();
  return out;
}

void ArcIntervalSet::merge() {
  if (parts_.empty()) return;
  std::sort(parts_.begin(), parts_.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  merged.push_back(parts_.front());
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    Interval& last = merged.back();
    if (parts_[i].lo <= last.hi) {
      last.hi = std::max(last.hi, parts_[i].hi);
    } else {
      merged.push_back(parts_[i]);
    }
  }
  parts_ = std::move(merged);
}

double ArcIntervalSet::total_length() const {
  double sum = 0.0;
  for (const Interval& iv : parts_) sum += iv.hi - iv.lo;
  // Wraparound adjacency cannot double-count: pieces never overlap after merge.
  return std::min(sum, kTwoPi);
}

bool ArcIntervalSet::contains_angle(double theta) const {
  const double t = wrap_angle(theta);
  for (const Interval& iv : parts_) {
    if (t >= iv.lo && t <= iv.hi) return true;
    // theta == 0 also matches an interval ending exactly at 2*pi.
    if (t == 0.0 && iv.hi == kTwoPi) return true;
  }
  return false;
}

double ArcIntervalSet::boundary_distance(double theta) const {
  if (parts_.empty()) return kTwoPi;
  const double t = wrap_angle(theta);
  double best = std::numeric_limits<double>::infinity();
  for (const Interval& iv : parts_) {
    for (double e : {iv.lo, iv.hi}) {
      double d = std::fabs(wrap_signed(t - e));
      best = std::min(best, d);
    }
  }
  return best;
}

std::vector<ArcIntervalSet::Gap> ArcIntervalSet::gaps(double min_length) const {
  std::vector<Gap> out;
  if (parts_.empty()) {
    out.push_back({0.0, kTwoPi});
    return out;
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const double end = parts_[i].hi;
    double next_start;
    if (i + 1 < parts_.size()) {
      next_start = parts_[i + 1].lo;
    } else {
      next_start = parts_.front().lo + kTwoPi;  // circular wrap to first piece
    }
    const double len = next_start - end;
    if (len > min_length) out.push_back({wrap_angle(end), len});
  }
  return out;
}

bool ArcIntervalSet::covers_circle(double tol) const {
  return gaps(tol).empty();
}

// ---------------------------------------------------------------------------
// Arc computations
// ---------------------------------------------------------------------------

ArcIntervalSet halfplane_arc(double normal_angle, double offset, double radius,
                             double offset_slack) {
  if (!(radius > 0.0)) throw std::invalid_argument("halfplane_arc: radius must be > 0");
  if (offset <= -(radius - offset_slack)) return ArcIntervalSet::full_circle();
  if (offset >= radius - offset_slack) {
    if (offset <= radius + offset_slack) {
      return ArcIntervalSet::of(normal_angle, normal_angle);  // tangency point
    }
    return ArcIntervalSet::empty_set();
  }
  const double beta = std::acos(offset / radius);
  return ArcIntervalSet::of(normal_angle - beta, normal_angle + beta);
}

ArcIntervalSet arc_intersection(const AngularDomain& domain, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("arc_intersection: radius must be > 0");
  // A convex wedge (sweep <= pi) is the intersection of the two halfplanes
  // bounded by the lines through its halflines. The offsets <vertex, n> carry
  // rounding of order eps*|vertex|; the slack keeps tangent lines tangent.
  const double slack =
      64.0 * std::numeric_limits<double>::epsilon() * (norm(domain.vertex) + radius);
  const double na = domain.start_direction + kPi / 2.0;
  const double nb = domain.start_direction + domain.sweep - kPi / 2.0;
  const double ca = dot(domain.vertex, unit_vector(na));
  const double cb = dot(domain.vertex, unit_vector(nb));
  return halfplane_arc(na, ca, radius, slack).intersected(halfplane_arc(nb, cb, radius, slack));
}

ArcIntervalSet strip_arc_intersection(const Strip& strip, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("strip_arc_intersection: radius must be > 0");
  const double slack = 16.0 * std::numeric_limits<double>::epsilon() *
                       (std::max(std::fabs(strip.offset_low), std::fabs(strip.offset_high)) + radius);
  const ArcIntervalSet above =
      halfplane_arc(strip.normal_angle, strip.offset_low, radius, slack);
  const ArcIntervalSet below =
      halfplane_arc(strip.normal_angle + kPi, -strip.offset_high, radius, slack);
  return above.intersected(below);
}

// ---------------------------------------------------------------------------
// Circle/ray helpers
// ---------------------------------------------------------------------------

std::vector<double> ray_circle_hits(PointXY origin, double dir_angle, double radius) {
  const PointXY u = unit_vector(dir_angle);
  // |origin + s u|^2 = radius^2  ->  s^2 + 2 s <origin,u> + |origin|^2 - radius^2 = 0
  const double b = dot(origin, u);
  const double c = dot(origin, origin) - radius * radius;
  const double disc = b * b - c;
  std::vector<double> out;
  if (disc < 0.0) return out;
  const double sq = std::sqrt(disc);
  for (double s : {-b - sq, -b + sq}) {
    if (s >= 0.0) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

std::array<PointXY, 2> tangent_points(PointXY p, double radius) {
  const double rho = norm(p);
  if (rho < radius) {
    throw std::domain_error("tangent_points: point lies strictly inside the circle");
  }
  const double base = angle_of(p);
  const double phi = std::acos(std::min(1.0, radius / rho));
  return {radius * unit_vector(base + phi), radius * unit_vector(base - phi)};
}

}  // namespace plankcert::geom
