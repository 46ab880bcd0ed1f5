#pragma once

// Restarted projected-gradient optimization of real objectives over the
// complex unit sphere {x in C^n : |x| = 1}.

#include <cstdint>
#include <functional>
#include <random>

#include "optrig/linalg.hpp"

namespace optrig {

struct SphereOptConfig {
  int restarts = 32;
  int max_iters = 500;
  double step_tol = 1e-12;
  double value_tol = 1e-10;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SphereOptResult {
  double value = 0.0;
  UnitVector argmin;  // the maximizer for maximize_on_sphere
  bool converged = false;
  int restarts_agreeing = 0;
};

/// Objective evaluated at a unit vector. For minimization, +inf marks a
/// point outside the admissible set (e.g. |Tx| = 0) and is rejected by the
/// line search; NaN (or -inf) raises NonFiniteObjective.
using SphereObjective = std::function<double(const CVector&)>;

/// Euclidean gradient of the objective in R^{2n}, packed as
/// d/dRe x_k + i d/dIm x_k. Only the tangential part is used.
using SphereGradient = std::function<CVector(const CVector&)>;

SphereOptResult minimize_on_sphere(const SphereObjective& objective, int n, const SphereOptConfig& cfg,
                                   const SphereGradient& gradient = {});

SphereOptResult maximize_on_sphere(const SphereObjective& objective, int n, const SphereOptConfig& cfg,
                                   const SphereGradient& gradient = {});

/// Central-difference gradient with step h (ambient, not projected).
CVector finite_difference_gradient(const SphereObjective& objective, const CVector& x, double h = 1e-6);

/// Seed of restart r, derived from the run seed (splitmix64).
std::uint64_t restart_seed(std::uint64_t seed, int restart);

/// Haar-distributed unit vector: normalized standard complex Gaussian.
CVector haar_unit_vector(int n, std::mt19937_64& rng);

}  // namespace optrig
