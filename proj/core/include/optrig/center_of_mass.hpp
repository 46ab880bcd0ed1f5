#pragma once

// Real and total centers of mass of T relative to A:
//   real:  eps0    minimizes f(eps)    = |T - eps A|    over eps in R
//   total: lambda0 minimizes g(lambda) = |T - lambda A| over lambda in C
// together with a unit "witness" x attaining |B x| = |B| for B = T - center*A
// on which <Bx, Ax> vanishes (real part only, in the real case).

#include <optional>

#include "optrig/linalg.hpp"
#include "optrig/sphere_opt.hpp"

namespace optrig {

struct CenterOptions {
  double tol = 1e-9;           // value tolerance, relative to |T|
  double witness_tol = 1e-6;   // relative to max(1, |B| |A|)
  double tol_subspace = kDefaultSubspaceTol;
  int scan_steps = 2000;
  // Restrict the real search to [lo, hi] instead of |eps| <= 2|T|/|A|.
  std::optional<std::pair<double, double>> real_interval;
  SphereOptConfig witness_search{16, 500, 1e-14, 1e-12, 0};
};

struct RealCenterResult {
  double epsilon0;
  double residual;
  double flat_lo;
  double flat_hi;
  bool unique;
  UnitVector witness;

  double flat_width() const { return flat_hi - flat_lo; }
};

struct TotalCenterResult {
  Complex lambda0;
  double residual;
  bool unique;
  UnitVector witness;
};

/// Radius 2|T|/|A| outside of which |T - sA| > |T| for any scalar s.
double center_search_radius(const ComplexMatrix& t, const ComplexMatrix& a);

RealCenterResult real_center_of_mass(const ComplexMatrix& t, const ComplexMatrix& a,
                                     const CenterOptions& opts = {});
inline RealCenterResult real_center_of_mass(const ComplexMatrix& t, const ComplexMatrix& a, double tol) {
  CenterOptions o;
  o.tol = tol;
  return real_center_of_mass(t, a, o);
}

TotalCenterResult total_center_of_mass(const ComplexMatrix& t, const ComplexMatrix& a,
                                       const CenterOptions& opts = {});
inline TotalCenterResult total_center_of_mass(const ComplexMatrix& t, const ComplexMatrix& a, double tol) {
  CenterOptions o;
  o.tol = tol;
  return total_center_of_mass(t, a, o);
}

/// True when sigma_min(A) > tol, i.e. 0 is not in the approximate point
/// spectrum of A; the real center of any T relative to A is then unique.
bool center_uniqueness(const ComplexMatrix& a, const RealCenterResult& result, double tol = 1e-9);

/// Unit x in the maximizing subspace of B = T - center*A minimizing
/// |Re<Bx, Ax>|. Throws WitnessNotFound if that minimum exceeds witness_tol.
/// Returns e_1 when B = 0.
UnitVector extract_witness(const ComplexMatrix& t, const ComplexMatrix& a, double center,
                           const CenterOptions& opts = {});

/// Complex variant: minimizes |<Bx, Ax>| over the maximizing subspace.
UnitVector extract_witness(const ComplexMatrix& t, const ComplexMatrix& a, Complex center,
                           const CenterOptions& opts = {});

}  // namespace optrig
