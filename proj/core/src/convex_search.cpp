#include "optrig/convex_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "optrig/errors.hpp"

namespace optrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFlatRatio = 0.75;

bool resolved(double a, double b, double floor) {
  return (b - a) <= 4.0 * kEps * std::max(std::abs(a), std::abs(b)) || (b - a) <= floor;
}

double checked(double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteObjective, "non-finite value in 1D search");
  return v;
}

// inside: f(inside) <= level; outside: f(outside) > level. Returns the
// crossing point to floating resolution.
double bisect_edge(const ScalarFunction& f, double inside, double outside, double level, double floor) {
  double a = inside;
  double b = outside;
  while (true) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (resolved(lo, hi, floor)) break;
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    if (checked(f(m)) <= level) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

struct Edge {
  double position;
  double outside;  // a point with f > level, or the boundary itself
  bool at_boundary;
};

Edge scan_edge(const ScalarFunction& f, double x0, double bound, double step, double level, double floor) {
  double a = x0;
  const double dir = bound >= x0 ? 1.0 : -1.0;
  while (true) {
    if (a == bound) return {bound, bound, true};
    double b = a + dir * step;
    if ((dir > 0 && b > bound) || (dir < 0 && b < bound)) b = bound;
    if (checked(f(b)) > level) return {bisect_edge(f, a, b, level, floor), b, false};
    a = b;
  }
}

Edge refine_edge(const ScalarFunction& f, double x0, const Edge& outer, double level, double floor) {
  if (outer.at_boundary && checked(f(outer.outside)) <= level) return outer;
  return {bisect_edge(f, x0, outer.outside, level, floor), outer.outside, false};
}

}  // namespace

GoldenResult golden_section(const ScalarFunction& f, double lo, double hi) {
  if (!(lo <= hi)) throw Error(ErrorKind::InvalidArgument, "golden_section: empty interval");
  const double floor = 1e-15 * (hi - lo);
  const double c = 2.0 / (1.0 + std::sqrt(5.0));

  double a = lo;
  double b = hi;
  double fa = checked(f(a));
  if (lo == hi) return {a, fa};
  double fb = checked(f(b));
  double u = c * a + (1.0 - c) * b;
  double v = (1.0 - c) * a + c * b;
  double fu = checked(f(u));
  double fv = checked(f(v));

  GoldenResult best{a, fa};
  auto consider = [&best](double x, double fx) {
    if (fx < best.value) best = {x, fx};
  };
  consider(b, fb);
  consider(u, fu);
  consider(v, fv);

  while (!resolved(a, b, floor)) {
    if (fu > fv) {
      a = u;
      u = v;
      fu = fv;
      v = (1.0 - c) * a + c * b;
      fv = checked(f(v));
      consider(v, fv);
    } else {
      b = v;
      v = u;
      fv = fu;
      u = c * a + (1.0 - c) * b;
      fu = checked(f(u));
      consider(u, fu);
    }
    if (!(u < v)) break;
  }
  return best;
}

ConvexMinimum minimize_convex(const ScalarFunction& f, double lo, double hi, double level_tol, int scan_steps) {
  if (!(level_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "minimize_convex: level_tol must be > 0");
  if (scan_steps < 1) throw Error(ErrorKind::InvalidArgument, "minimize_convex: scan_steps must be >= 1");

  const GoldenResult g = golden_section(f, lo, hi);
  if (lo == hi) return {g.x, g.value, g.x, g.x, false, g.x, g.x};

  const double x0 = g.x;
  const double f0 = g.value;
  const double step = (hi - lo) / scan_steps;
  const double floor = 1e-15 * (hi - lo);

  const double level1 = f0 + level_tol;
  const double level2 = f0 + 0.25 * level_tol;

  const Edge r1 = scan_edge(f, x0, hi, step, level1, floor);
  const Edge l1 = scan_edge(f, x0, lo, step, level1, floor);
  const Edge r2 = refine_edge(f, x0, r1, level2, floor);
  const Edge l2 = refine_edge(f, x0, l1, level2, floor);

  const double w1 = r1.position - l1.position;
  const double w2 = r2.position - l2.position;
  const double m1 = 0.5 * (r1.position + l1.position);
  const double m2 = 0.5 * (r2.position + l2.position);
  const double extrapolated = std::clamp((4.0 * m2 - m1) / 3.0, l2.position, r2.position);

  ConvexMinimum out;
  out.level_lo = l1.position;
  out.level_hi = r1.position;
  out.flat = w1 > 1e-12 * (hi - lo) && w2 > kFlatRatio * w1;

  const double fc = checked(f(extrapolated));
  if (fc <= f0 || out.flat) {
    out.argmin = extrapolated;
    out.value = fc;
  } else {
    // Near a smooth minimum f is flat to rounding over ~sqrt(eps) in x, so a
    // slightly higher fc says nothing about position. Only a rise that is a
    // visible fraction of the level means the extrapolation went wrong.
    const double tie = std::max(8.0 * kEps * std::abs(f0), 1e-2 * level_tol);
    out.argmin = fc - f0 <= tie ? extrapolated : x0;
    out.value = fc - f0 <= tie ? fc : f0;
  }
  if (out.flat) {
    out.set_lo = l2.position;
    out.set_hi = r2.position;
  } else {
    out.set_lo = out.argmin;
    out.set_hi = out.argmin;
  }
  return out;
}

}  // namespace optrig
