#include "plankcert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace plankcert::numerics {
namespace {

// Kronrod-15 abscissae on [-1, 1] (symmetric; index 7 is the center) and the
// matching Kronrod and Gauss-7 weights. Standard QUADPACK constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Counts integrand evaluations against the shared budget and rejects
// non-finite samples at their original abscissa.
struct Evaluator {
  const std::function<double(double)>& f;
  std::int64_t max_evaluations;
  std::int64_t count = 0;

  struct BudgetExhausted {};

  double operator()(double x) {
    if (count >= max_evaluations) throw BudgetExhausted{};
    ++count;
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw quadrature_error("integrand returned a non-finite value",
                             QuadratureResult{0.0, 0.0, count}, x);
    }
    return v;
  }
};

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double resabs = 0.0;  // integral of |f| by the Kronrod rule
  double error = 0.0;   // |K15 - G7|
};

template <typename F>
Segment gk15(F&& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = g(center - half * kXgk[i]);
    fv[14 - i] = g(center + half * kXgk[i]);
  }
  fv[7] = g(center);

  double resk = kWgk[7] * fv[7];
  double resabs = kWgk[7] * std::fabs(fv[7]);
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    if (i % 2 == 1) {
      resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
  }
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.value = resk * half;
  s.resabs = resabs * half;
  s.error = std::fabs((resk - resg) * half);
  return s;
}

double kahan_total(const std::vector<Segment>& segs) {
  double sum = 0.0, comp = 0.0;
  for (const Segment& s : segs) {
    const double y = s.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Globally adaptive refinement: repeatedly bisect the segment with the
// largest error until the error sum meets tol, the rounding floor is reached,
// or no segment can be split further.
template <typename G>
QuadratureResult adaptive(G&& g, double lo, double hi, double tol, Evaluator& eval) {
  std::vector<Segment> segs;
  const auto order = [](const Segment& a, const Segment& b) {
    if (a.error != b.error) return a.error < b.error;
    return a.lo < b.lo;  // total order keeps refinement deterministic
  };

  try {
    segs.push_back(gk15(g, lo, hi));
    while (true) {
      double err_sum = 0.0, resabs_sum = 0.0;
      for (const Segment& s : segs) {
        err_sum += s.error;
        resabs_sum += s.resabs;
      }
      if (err_sum <= tol) break;
      if (err_sum <= 50.0 * kEps * resabs_sum) break;  // rounding floor

      auto worst = std::max_element(segs.begin(), segs.end(), order);
      const double width = worst->hi - worst->lo;
      const double scale = std::max({std::fabs(worst->lo), std::fabs(worst->hi), 1.0});
      if (width <= 8.0 * kEps * scale) break;  // cannot subdivide further

      const double mid = 0.5 * (worst->lo + worst->hi);
      const Segment left = gk15(g, worst->lo, mid);
      const Segment right = gk15(g, mid, worst->hi);
      *worst = left;
      segs.push_back(right);
    }
  } catch (const Evaluator::BudgetExhausted&) {
    QuadratureResult partial;
    partial.value = kahan_total(segs);
    for (const Segment& s : segs) partial.error_estimate += s.error;
    partial.evaluations = eval.count;
    throw quadrature_error("evaluation budget exhausted", partial, std::nullopt);
  }

  QuadratureResult out;
  out.value = kahan_total(segs);
  double err_sum = 0.0, resabs_sum = 0.0;
  for (const Segment& s : segs) {
    err_sum += s.error;
    resabs_sum += s.resabs;
  }
  out.error_estimate = std::max(err_sum, 50.0 * kEps * resabs_sum);
  out.evaluations = eval.count;
  return out;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, SingularityHint hint, std::int64_t max_evaluations) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate: bounds must be finite");
  }
  if (a > b) throw std::invalid_argument("integrate: need a <= b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
  if (max_evaluations < 15) throw std::invalid_argument("integrate: evaluation cap too small");

  Evaluator eval{f, max_evaluations};

  if (a == b) {
    eval(a);  // finiteness probe; keeps evaluations >= 1
    return QuadratureResult{0.0, 0.0, eval.count};
  }

  const bool sing_lo = hint.at_lower == EndpointBehavior::inverse_sqrt;
  const bool sing_hi = hint.at_upper == EndpointBehavior::inverse_sqrt;

  // x = a + (b-a) s^2 maps [0,1] -> [a,b]; dx = 2 (b-a) s ds. Any C * (x-a)^(p/2)
  // endpoint behavior (p >= -1) becomes smooth in s.
  const auto from_lower = [&eval](double lo, double hi) {
    const double span = hi - lo;
    return [&eval, lo, span](double s) { return eval(lo + span * s * s) * 2.0 * span * s; };
  };
  const auto from_upper = [&eval](double lo, double hi) {
    const double span = hi - lo;
    return [&eval, hi, span](double s) { return eval(hi - span * s * s) * 2.0 * span * s; };
  };

  QuadratureResult out;
  if (sing_lo && sing_hi) {
    const double mid = 0.5 * (a + b);
    const QuadratureResult left = adaptive(from_lower(a, mid), 0.0, 1.0, 0.5 * tol, eval);
    const QuadratureResult right = adaptive(from_upper(mid, b), 0.0, 1.0, 0.5 * tol, eval);
    out.value = left.value + right.value;
    out.error_estimate = left.error_estimate + right.error_estimate;
  } else if (sing_lo) {
    out = adaptive(from_lower(a, b), 0.0, 1.0, tol, eval);
  } else if (sing_hi) {
    out = adaptive(from_upper(a, b), 0.0, 1.0, tol, eval);
  } else {
    out = adaptive([&eval](double x) { return eval(x); }, a, b, tol, eval);
  }
  out.evaluations = eval.count;
  return out;
}

}  // namespace plankcert::numerics
