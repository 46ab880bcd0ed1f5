#pragma once

// Birkhoff-James orthogonality of operators, decided two ways:
//   route_w0:   0 lies in {Re<Tx, Ax> (or <Tx, Ax>) : x unit in the
//               maximizing subspace of T}
//   route_norm: |T - sA| >= |T| for all real (or complex) s, via the
//               center of mass of T relative to A.
// The two routes agree by the sequence characterization of orthogonality.

#include <optional>

#include "optrig/center_of_mass.hpp"
#include "optrig/linalg.hpp"

namespace optrig {

/// {Re<Tx, Ax> : |x| = 1, x in the maximizing subspace of T} = [lo, hi].
struct W0Interval {
  double lo;
  double hi;
  UnitVector attaining_lo;
  UnitVector attaining_hi;

  bool contains(double v, double tol = 0.0) const { return lo - tol <= v && v <= hi + tol; }
};

struct OrthogonalityVerdict {
  bool orthogonal;
  bool route_w0;
  bool route_norm;
  std::optional<UnitVector> witness;
  // Diagnostics: min |<Tx,Ax>| (total) or distance of 0 from [lo, hi] (real),
  // and the relative norm drop (|T| - min_s |T - sA|) / |T|.
  double w0_distance = 0.0;
  double norm_drop = 0.0;
};

struct OrthoOptions {
  double tol = 1e-6;
  double tol_subspace = kDefaultSubspaceTol;
  CenterOptions center;
  SphereOptConfig sphere{16, 500, 1e-14, 1e-12, 0};
};

W0Interval w0_interval(const ComplexMatrix& t, const ComplexMatrix& a, double tol_subspace = kDefaultSubspaceTol);

OrthogonalityVerdict is_real_orthogonal(const ComplexMatrix& t, const ComplexMatrix& a, const OrthoOptions& opts = {});
inline OrthogonalityVerdict is_real_orthogonal(const ComplexMatrix& t, const ComplexMatrix& a, double tol) {
  OrthoOptions o;
  o.tol = tol;
  return is_real_orthogonal(t, a, o);
}

OrthogonalityVerdict is_total_orthogonal(const ComplexMatrix& t, const ComplexMatrix& a, const OrthoOptions& opts = {});
inline OrthogonalityVerdict is_total_orthogonal(const ComplexMatrix& t, const ComplexMatrix& a, double tol) {
  OrthoOptions o;
  o.tol = tol;
  return is_total_orthogonal(t, a, o);
}

}  // namespace optrig
