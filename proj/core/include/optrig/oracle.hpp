#pragma once

// Brute-force verifiers for the optimizers in this library. Everything here
// uses direct function evaluation only: grids, Haar sampling, a fixed
// parameterized sweep for n = 2, and a compass-search polish. No gradients,
// golden section, or code shared with sphere_opt / convex_search.

#include <cstdint>
#include <functional>

#include "optrig/linalg.hpp"

namespace optrig::oracle {

struct GridSpec {
  double lo = -1.0;
  double hi = 1.0;
  int points = 401;
  int refine_rounds = 3;

  void validate() const;
};

struct GridMinReal {
  double argmin;
  double min;
};

struct GridMinComplex {
  Complex argmin;
  double min;
};

struct SampleMin {
  double value;
  CVector vector;
};

/// Grid evaluation on [lo, hi], then refine_rounds re-grids around the best
/// point with the half-width shrunk by 10 each round.
GridMinReal grid_min_real(const std::function<double(double)>& f, const GridSpec& spec);

/// 2D analogue over the square [-radius, radius]^2 (spec.lo/hi unused).
GridMinComplex grid_min_complex(const std::function<double(Complex)>& f, double radius, const GridSpec& spec);

/// Smallest and largest grid points of [lo, hi] where f <= min + tol
/// (single pass, no refinement).
std::pair<double, double> grid_level_set(const std::function<double(double)>& f, const GridSpec& spec, double tol);

struct SampleOptions {
  int samples = 100000;
  std::uint64_t seed = 12345;
  bool sweep_n2 = true;     // add the (sqrt(1-s), sqrt(s) e^{i phi}) sweep when n == 2
  int sweep_s = 500;
  int sweep_phi = 64;
  int polish_starts = 4;    // compass-search polish from the best points (0 disables)
  double polish_min_step = 1e-9;
};

/// Minimum of objective over Haar-random unit vectors (plus the n = 2 sweep
/// and polish). +inf values are skipped; NaN throws NonFiniteObjective.
SampleMin sphere_sample_min(const std::function<double(const CVector&)>& objective, int n,
                            const SampleOptions& opts = {});
SampleMin sphere_sample_min(const std::function<double(const CVector&)>& objective, int n, int samples,
                            std::uint64_t seed);

SampleMin sphere_sample_max(const std::function<double(const CVector&)>& objective, int n,
                            const SampleOptions& opts = {});

}  // namespace optrig::oracle
