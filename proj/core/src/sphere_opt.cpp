#include "optrig/sphere_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "optrig/errors.hpp"

namespace optrig {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxResample = 64;
constexpr int kStallIters = 3;

double checked(double v) {
  if (std::isnan(v) || v == -std::numeric_limits<double>::infinity()) {
    throw Error(ErrorKind::NonFiniteObjective, "objective returned " + std::to_string(v));
  }
  return v;
}

CVector tangent(const CVector& g, const CVector& x) {
  // real inner product in R^{2n} is Re(x^H g)
  return g - x * x.dot(g).real();
}

CVector retract(const CVector& x) { return x / x.norm(); }

struct RunResult {
  double value;
  CVector x;
  bool converged;
};

RunResult run_restart(const SphereObjective& objective, const SphereGradient& gradient, int n,
                      const SphereOptConfig& cfg, int restart) {
  std::mt19937_64 rng(restart_seed(cfg.seed, restart));

  CVector x;
  double f = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < kMaxResample && !std::isfinite(f); ++attempt) {
    x = haar_unit_vector(n, rng);
    f = checked(objective(x));
  }
  if (!std::isfinite(f)) {
    throw Error(ErrorKind::NonFiniteObjective, "no admissible starting point after resampling");
  }

  auto grad_at = [&](const CVector& p) -> std::optional<CVector> {
    CVector g = gradient ? gradient(p) : finite_difference_gradient(objective, p);
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      if (!std::isfinite(g(k).real()) || !std::isfinite(g(k).imag())) return std::nullopt;
    }
    return tangent(g, p);
  };

  auto g0 = grad_at(x);
  if (!g0) return {f, x, false};
  CVector g = *g0;

  double alpha = 1.0;
  int stall = 0;
  bool converged = false;

  for (int it = 0; it < cfg.max_iters; ++it) {
    const double gnorm2 = g.squaredNorm();
    if (gnorm2 == 0.0) {
      converged = true;
      break;
    }
    const double gnorm = std::sqrt(gnorm2);

    double step = alpha;
    CVector xn;
    double fn = 0.0;
    bool accepted = false;
    while (step * gnorm >= cfg.step_tol) {
      xn = retract(x - step * g);
      fn = checked(objective(xn));
      if (fn <= f - kArmijo * step * gnorm2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      converged = true;
      break;
    }

    auto gn = grad_at(xn);
    if (!gn) {
      x = xn;
      f = fn;
      break;
    }

    // Barzilai-Borwein initial step for the next line search.
    const CVector s = xn - x;
    const CVector y = *gn - g;
    const double sy = s.dot(y).real();
    const double ss = s.squaredNorm();
    alpha = sy > 0.0 ? ss / sy : 2.0 * step;
    alpha = std::clamp(alpha, 1e-10, 1e10);

    const double decrease = f - fn;
    x = xn;
    f = fn;
    g = *gn;

    if (decrease <= cfg.value_tol * std::abs(f)) {
      if (++stall >= kStallIters) {
        converged = true;
        break;
      }
    } else {
      stall = 0;
    }
  }
  return {f, x, converged};
}

}  // namespace

void SphereOptConfig::validate() const {
  if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be >= 1");
  if (max_iters < 1) throw Error(ErrorKind::InvalidArgument, "max_iters must be >= 1");
  if (!(step_tol > 0.0) || !(value_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CVector haar_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  double nrm = 0.0;
  do {
    for (int k = 0; k < n; ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      v(k) = Complex(re, im);
    }
    nrm = v.norm();
  } while (nrm < 1e-150);
  return v / nrm;
}

CVector finite_difference_gradient(const SphereObjective& objective, const CVector& x, double h) {
  CVector g(x.size());
  CVector p = x;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const Complex orig = x(k);
    p(k) = orig + Complex(h, 0.0);
    const double fre_plus = objective(p);
    p(k) = orig - Complex(h, 0.0);
    const double fre_minus = objective(p);
    p(k) = orig + Complex(0.0, h);
    const double fim_plus = objective(p);
    p(k) = orig - Complex(0.0, h);
    const double fim_minus = objective(p);
    p(k) = orig;
    g(k) = Complex((fre_plus - fre_minus) / (2.0 * h), (fim_plus - fim_minus) / (2.0 * h));
  }
  return g;
}

SphereOptResult minimize_on_sphere(const SphereObjective& objective, int n, const SphereOptConfig& cfg,
                                   const SphereGradient& gradient) {
  cfg.validate();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sphere dimension must be >= 1");

  std::vector<RunResult> runs;
  runs.reserve(static_cast<std::size_t>(cfg.restarts));
  for (int r = 0; r < cfg.restarts; ++r) {
    runs.push_back(run_restart(objective, gradient, n, cfg, r));
  }

  // Lowest value wins; ties go to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value < runs[best].value) best = r;
  }
  const double best_value = runs[best].value;
  const double agree_tol = 1e-8 * (1.0 + std::abs(best_value));
  int agreeing = 0;
  for (const auto& run : runs) {
    if (run.value - best_value <= agree_tol) ++agreeing;
  }

  UnitVector argmin = UnitVector::normalized(runs[best].x).phase_normalized();
  return SphereOptResult{best_value, std::move(argmin), runs[best].converged, agreeing};
}

SphereOptResult maximize_on_sphere(const SphereObjective& objective, int n, const SphereOptConfig& cfg,
                                   const SphereGradient& gradient) {
  SphereObjective negated = [&objective](const CVector& x) { return -objective(x); };
  SphereGradient negated_grad;
  if (gradient) {
    negated_grad = [&gradient](const CVector& x) -> CVector { return -gradient(x); };
  }
  SphereOptResult r = minimize_on_sphere(negated, n, cfg, negated_grad);
  r.value = -r.value;
  return r;
}

}  // namespace optrig
