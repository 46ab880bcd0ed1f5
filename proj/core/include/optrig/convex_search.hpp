#pragma once

// Derivative-free minimization of convex functions of one real variable.

#include <functional>

namespace optrig {

using ScalarFunction = std::function<double(double)>;

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi], run until the bracket reaches
/// floating-point resolution. Returns the best point evaluated (endpoints
/// included).
GoldenResult golden_section(const ScalarFunction& f, double lo, double hi);

struct ConvexMinimum {
  double argmin = 0.0;
  double value = 0.0;
  // Estimated minimizer set. Degenerate ([argmin, argmin]) unless flat.
  double set_lo = 0.0;
  double set_hi = 0.0;
  bool flat = false;
  // Level set {f <= min + level_tol} found while polishing.
  double level_lo = 0.0;
  double level_hi = 0.0;
};

/// Minimizes a convex f on [lo, hi].
///
/// Golden section locates a near-minimizer x0. The level sets
/// {f <= f(x0) + tau} for tau = level_tol and level_tol/4 are then bracketed
/// by an outward scan with step (hi - lo)/scan_steps and bisection. Their
/// midpoints are extrapolated linearly in tau to tau = 0, which is exact
/// for kinks and flat segments and removes the O(tau) asymmetry error at
/// smooth minima. A width ratio w(tau/4)/w(tau) near 1 marks a flat
/// minimizer set (smooth minima give ~1/2, kinks ~1/4).
ConvexMinimum minimize_convex(const ScalarFunction& f, double lo, double hi, double level_tol,
                              int scan_steps = 2000);

}  // namespace optrig
