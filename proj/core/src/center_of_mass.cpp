#include "optrig/center_of_mass.hpp"

#include <cmath>
#include <string>

#include "optrig/convex_search.hpp"
#include "optrig/errors.hpp"

namespace optrig {

namespace {

double relative_operator_norm(const ComplexMatrix& t, const ComplexMatrix& a) {
  require_same_dim(t, a, "center of mass");
  const double na = operator_norm(a);
  if (!(na > 0.0)) {
    throw Error(ErrorKind::ZeroRelativeOperator, "relative operator A has zero norm");
  }
  return na;
}

// Level used for the flat-region polish; the tolerance is relative to |T|.
double level_for(double tol, double nt, double na) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  return tol * (nt > 0.0 ? nt : na);
}

double witness_threshold(const CenterOptions& opts, double nb, double na) {
  return opts.witness_tol * std::max(1.0, nb * na);
}

// Returns the maximizing subspace of B and the compressed form
// M = V^H A^H B V, so that <B V c, A V c> = c^H M c.
struct CompressedForm {
  CMatrix basis;
  CMatrix m;
};

std::optional<CompressedForm> compress(const CMatrix& b, const CMatrix& a, double nt, double na, double scale,
                                       double tol_subspace) {
  const double nb = operator_norm(b);
  if (nb <= 1e-14 * std::max(nt + scale * na, 1e-300)) return std::nullopt;
  MaximizingSubspace sub = maximizing_subspace(b, tol_subspace);
  CMatrix m = (a * sub.basis).adjoint() * (b * sub.basis);
  return CompressedForm{std::move(sub.basis), std::move(m)};
}

}  // namespace

double center_search_radius(const ComplexMatrix& t, const ComplexMatrix& a) {
  const double na = relative_operator_norm(t, a);
  return 2.0 * operator_norm(t) / na;
}

RealCenterResult real_center_of_mass(const ComplexMatrix& t, const ComplexMatrix& a, const CenterOptions& opts) {
  const double na = relative_operator_norm(t, a);
  const double nt = operator_norm(t);
  const double radius = 2.0 * nt / na;
  double lo = -radius;
  double hi = radius;
  if (opts.real_interval) {
    lo = opts.real_interval->first;
    hi = opts.real_interval->second;
    if (!(lo <= hi)) throw Error(ErrorKind::InvalidArgument, "empty real search interval");
  }

  const CMatrix& tm = t.data();
  const CMatrix& am = a.data();
  const ScalarFunction f = [&](double eps) { return operator_norm(CMatrix(tm - eps * am)); };

  const ConvexMinimum cm = minimize_convex(f, lo, hi, level_for(opts.tol, nt, na), opts.scan_steps);
  const double eps0 = cm.flat ? 0.5 * (cm.set_lo + cm.set_hi) : cm.argmin;

  UnitVector witness = extract_witness(t, a, eps0, opts);
  return RealCenterResult{eps0, f(eps0), cm.set_lo, cm.set_hi, !cm.flat, std::move(witness)};
}

TotalCenterResult total_center_of_mass(const ComplexMatrix& t, const ComplexMatrix& a, const CenterOptions& opts) {
  const double na = relative_operator_norm(t, a);
  const double nt = operator_norm(t);
  const double radius = 2.0 * nt / na;
  const double level = level_for(opts.tol, nt, na);

  const CMatrix& tm = t.data();
  const CMatrix& am = a.data();
  const Complex i(0.0, 1.0);

  // h(re) = min over im of |T - (re + i im) A| is convex (partial minimum
  // of a jointly convex function), so nested 1D searches are exact.
  const ScalarFunction h = [&](double re) {
    const CMatrix shifted = tm - re * am;
    const ScalarFunction g = [&](double im) { return operator_norm(CMatrix(shifted - (i * im) * am)); };
    return golden_section(g, -radius, radius).value;
  };
  const ConvexMinimum outer = minimize_convex(h, -radius, radius, level, opts.scan_steps);
  const double re0 = outer.flat ? 0.5 * (outer.set_lo + outer.set_hi) : outer.argmin;

  const CMatrix shifted = tm - re0 * am;
  const ScalarFunction g = [&](double im) { return operator_norm(CMatrix(shifted - (i * im) * am)); };
  const ConvexMinimum inner = minimize_convex(g, -radius, radius, level, opts.scan_steps);
  const double im0 = inner.flat ? 0.5 * (inner.set_lo + inner.set_hi) : inner.argmin;

  const Complex lambda0(re0, im0);
  UnitVector witness = extract_witness(t, a, lambda0, opts);
  return TotalCenterResult{lambda0, operator_norm(CMatrix(tm - lambda0 * am)), !(outer.flat || inner.flat),
                           std::move(witness)};
}

bool center_uniqueness(const ComplexMatrix& a, [[maybe_unused]] const RealCenterResult& result, double tol) {
  return min_singular_value(a) > tol;
}

UnitVector extract_witness(const ComplexMatrix& t, const ComplexMatrix& a, double center, const CenterOptions& opts) {
  require_same_dim(t, a, "extract_witness");
  const double na = operator_norm(a);
  const double nt = operator_norm(t);
  const CMatrix b = t.data() - center * a.data();
  const auto form = compress(b, a.data(), nt, na, std::abs(center), opts.tol_subspace);
  if (!form) return UnitVector::basis(t.dim(), 0);

  const CMatrix herm = (form->m + form->m.adjoint()) / 2.0;
  const HermitianEigen es = hermitian_eigen(herm);
  const Eigen::Index k = es.values.size();
  const double lo = es.values(0);
  const double hi = es.values(k - 1);
  const double threshold = witness_threshold(opts, operator_norm(b), na);
  if (lo > threshold || hi < -threshold) {
    throw Error(ErrorKind::WitnessNotFound,
                "Re<Bx, Ax> on the maximizing subspace spans [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "], which misses 0 by more than " + std::to_string(threshold));
  }

  CVector c;
  if (lo >= 0.0) {
    c = es.vectors.col(0);
  } else if (hi <= 0.0) {
    c = es.vectors.col(k - 1);
  } else {
    // t*lo + (1-t)*hi = 0 on orthonormal eigenvectors
    const double w = hi / (hi - lo);
    c = std::sqrt(w) * es.vectors.col(0) + std::sqrt(1.0 - w) * es.vectors.col(k - 1);
  }
  return UnitVector::normalized(form->basis * c).phase_normalized();
}

UnitVector extract_witness(const ComplexMatrix& t, const ComplexMatrix& a, Complex center, const CenterOptions& opts) {
  require_same_dim(t, a, "extract_witness");
  const double na = operator_norm(a);
  const double nt = operator_norm(t);
  const CMatrix b = t.data() - center * a.data();
  const auto form = compress(b, a.data(), nt, na, std::abs(center), opts.tol_subspace);
  if (!form) return UnitVector::basis(t.dim(), 0);

  const double threshold = witness_threshold(opts, operator_norm(b), na);
  const CMatrix& m = form->m;
  const int k = static_cast<int>(m.rows());

  CVector c;
  double attained = 0.0;
  if (k == 1) {
    c = CVector::Ones(1);
    attained = std::abs(m(0, 0));
  } else {
    const SphereObjective obj = [&m](const CVector& x) { return std::norm(x.dot(m * x)); };
    const SphereGradient grad = [&m](const CVector& x) -> CVector {
      const Complex p = x.dot(m * x);
      return 2.0 * (std::conj(p) * (m * x) + p * (m.adjoint() * x));
    };
    const SphereOptResult r = minimize_on_sphere(obj, k, opts.witness_search, grad);
    c = r.argmin.data();
    attained = std::sqrt(std::max(r.value, 0.0));
  }
  if (attained > threshold) {
    throw Error(ErrorKind::WitnessNotFound, "min |<Bx, Ax>| on the maximizing subspace is " +
                                                std::to_string(attained) + " > " + std::to_string(threshold));
  }
  return UnitVector::normalized(form->basis * c).phase_normalized();
}

}  // namespace optrig
