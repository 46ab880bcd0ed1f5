#include "optrig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "optrig/errors.hpp"

namespace optrig::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kPolishBudget = 200000;

double checked(double v) {
  if (std::isnan(v) || v == -kInf) throw Error(ErrorKind::NonFiniteObjective, "oracle objective is not finite");
  return v;
}

// Box-Muller from uniforms; intentionally separate from the optimizer's sampler.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  Complex next() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double u1 = u(rng_);
    while (u1 <= 0.0) u1 = u(rng_);
    const double u2 = u(rng_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
  }

 private:
  std::mt19937_64 rng_;
};

CVector random_unit(int n, GaussianSource& g) {
  CVector v(n);
  double nrm = 0.0;
  while (!(nrm > 1e-150)) {
    for (int k = 0; k < n; ++k) v(k) = g.next();
    nrm = v.norm();
  }
  return v / nrm;
}

struct Candidate {
  double value;
  CVector x;
};

void keep_best(std::vector<Candidate>& best, std::size_t cap, double value, const CVector& x) {
  if (cap == 0) {
    return;
  }
  if (best.size() < cap) {
    best.push_back({value, x});
  } else if (value < best.back().value) {
    best.back() = {value, x};
  } else {
    return;
  }
  std::sort(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
}

Candidate compass_polish(const std::function<double(const CVector&)>& f, Candidate start, double min_step) {
  const auto n = start.x.size();
  double h = 0.1;
  long evals = 0;
  while (h >= min_step && evals < kPolishBudget) {
    bool improved = false;
    for (Eigen::Index k = 0; k < n; ++k) {
      for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        CVector y = start.x;
        y(k) += h * dir;
        y /= y.norm();
        const double fy = checked(f(y));
        ++evals;
        if (fy < start.value) {
          start = {fy, std::move(y)};
          improved = true;
        }
      }
    }
    if (!improved) h *= 0.5;
  }
  return start;
}

}  // namespace

void GridSpec::validate() const {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "grid: lo must be < hi");
  if (points < 3) throw Error(ErrorKind::InvalidArgument, "grid: points must be >= 3");
  if (refine_rounds < 0) throw Error(ErrorKind::InvalidArgument, "grid: refine_rounds must be >= 0");
}

GridMinReal grid_min_real(const std::function<double(double)>& f, const GridSpec& spec) {
  spec.validate();
  GridMinReal best{spec.lo, kInf};
  double lo = spec.lo;
  double hi = spec.hi;
  for (int round = 0; round <= spec.refine_rounds; ++round) {
    for (int i = 0; i < spec.points; ++i) {
      const double x = lo + (hi - lo) * i / (spec.points - 1);
      const double v = f(x);
      if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteObjective, "grid_min_real: non-finite value");
      if (v < best.min) best = {x, v};
    }
    const double half = 0.5 * (hi - lo) / 10.0;
    lo = std::max(spec.lo, best.argmin - half);
    hi = std::min(spec.hi, best.argmin + half);
  }
  return best;
}

GridMinComplex grid_min_complex(const std::function<double(Complex)>& f, double radius, const GridSpec& spec) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid_min_complex: radius must be > 0");
  GridSpec check = spec;
  check.lo = -radius;
  check.hi = radius;
  check.validate();

  GridMinComplex best{Complex(0.0, 0.0), kInf};
  double re_lo = -radius, re_hi = radius, im_lo = -radius, im_hi = radius;
  for (int round = 0; round <= spec.refine_rounds; ++round) {
    for (int i = 0; i < spec.points; ++i) {
      const double re = re_lo + (re_hi - re_lo) * i / (spec.points - 1);
      for (int j = 0; j < spec.points; ++j) {
        const double im = im_lo + (im_hi - im_lo) * j / (spec.points - 1);
        const double v = f(Complex(re, im));
        if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteObjective, "grid_min_complex: non-finite value");
        if (v < best.min) best = {Complex(re, im), v};
      }
    }
    const double half_re = 0.5 * (re_hi - re_lo) / 10.0;
    const double half_im = 0.5 * (im_hi - im_lo) / 10.0;
    re_lo = std::max(-radius, best.argmin.real() - half_re);
    re_hi = std::min(radius, best.argmin.real() + half_re);
    im_lo = std::max(-radius, best.argmin.imag() - half_im);
    im_hi = std::min(radius, best.argmin.imag() + half_im);
  }
  return best;
}

std::pair<double, double> grid_level_set(const std::function<double(double)>& f, const GridSpec& spec, double tol) {
  spec.validate();
  std::vector<double> xs(static_cast<std::size_t>(spec.points));
  std::vector<double> vs(xs.size());
  double min = kInf;
  for (int i = 0; i < spec.points; ++i) {
    xs[i] = spec.lo + (spec.hi - spec.lo) * i / (spec.points - 1);
    vs[i] = f(xs[i]);
    if (!std::isfinite(vs[i])) throw Error(ErrorKind::NonFiniteObjective, "grid_level_set: non-finite value");
    min = std::min(min, vs[i]);
  }
  double lo = kInf;
  double hi = -kInf;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vs[i] <= min + tol) {
      lo = std::min(lo, xs[i]);
      hi = std::max(hi, xs[i]);
    }
  }
  return {lo, hi};
}

SampleMin sphere_sample_min(const std::function<double(const CVector&)>& objective, int n,
                            const SampleOptions& opts) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sphere_sample_min: n must be >= 1");
  if (opts.samples < 1) throw Error(ErrorKind::InvalidArgument, "sphere_sample_min: samples must be >= 1");

  std::vector<Candidate> best;
  const auto cap = static_cast<std::size_t>(std::max(opts.polish_starts, 1));
  GaussianSource gauss(opts.seed);
  for (int s = 0; s < opts.samples; ++s) {
    CVector x = random_unit(n, gauss);
    const double v = checked(objective(x));
    if (v == kInf) continue;
    keep_best(best, cap, v, x);
  }

  if (n == 2 && opts.sweep_n2) {
    // Global phase is irrelevant, so z1 can be taken real and nonnegative.
    for (int i = 0; i < opts.sweep_s; ++i) {
      const double s = static_cast<double>(i) / (opts.sweep_s - 1);
      for (int j = 0; j < opts.sweep_phi; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / opts.sweep_phi;
        CVector x(2);
        x(0) = std::sqrt(1.0 - s);
        x(1) = std::sqrt(s) * Complex(std::cos(phi), std::sin(phi));
        const double v = checked(objective(x));
        if (v == kInf) continue;
        keep_best(best, cap, v, x);
      }
    }
  }

  if (best.empty()) throw Error(ErrorKind::NonFiniteObjective, "sphere_sample_min: no admissible sample");

  Candidate winner = best.front();
  for (int k = 0; k < opts.polish_starts && k < static_cast<int>(best.size()); ++k) {
    Candidate polished = compass_polish(objective, best[static_cast<std::size_t>(k)], opts.polish_min_step);
    if (polished.value < winner.value) winner = std::move(polished);
  }
  return SampleMin{winner.value, winner.x};
}

SampleMin sphere_sample_min(const std::function<double(const CVector&)>& objective, int n, int samples,
                            std::uint64_t seed) {
  SampleOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  return sphere_sample_min(objective, n, opts);
}

SampleMin sphere_sample_max(const std::function<double(const CVector&)>& objective, int n,
                            const SampleOptions& opts) {
  SampleMin r = sphere_sample_min([&objective](const CVector& x) { return -objective(x); }, n, opts);
  r.value = -r.value;
  return r;
}

}  // namespace optrig::oracle
