#include "optrig/ortho.hpp"

#include <cmath>
#include <string>

#include "optrig/errors.hpp"

namespace optrig {

namespace {

void require_nonzero(const ComplexMatrix& t, const ComplexMatrix& a) {
  require_same_dim(t, a, "orthogonality");
  if (!(operator_norm(t) > 0.0)) throw Error(ErrorKind::ZeroOperator, "T has zero norm");
  if (!(operator_norm(a) > 0.0)) throw Error(ErrorKind::ZeroRelativeOperator, "A has zero norm");
}

// A norm decrease of order tol^2 corresponds to |Re<Tx,Ax>| of order tol on
// the maximizing subspace (the decrease is quadratic in that quantity when
// the top singular value is simple).
bool norm_route(double nt, double residual, double tol, double& drop) {
  drop = (nt - residual) / nt;
  return drop <= tol * tol;
}

[[noreturn]] void disagree(const char* which, const OrthogonalityVerdict& v) {
  throw Error(ErrorKind::RouteDisagreement,
              std::string(which) + ": route_w0=" + (v.route_w0 ? "true" : "false") +
                  " route_norm=" + (v.route_norm ? "true" : "false") +
                  " (w0 distance " + std::to_string(v.w0_distance) + ", norm drop " + std::to_string(v.norm_drop) + ")");
}

}  // namespace

W0Interval w0_interval(const ComplexMatrix& t, const ComplexMatrix& a, double tol_subspace) {
  require_same_dim(t, a, "w0_interval");
  if (!(operator_norm(t) > 0.0)) throw Error(ErrorKind::ZeroOperator, "T has zero norm");

  const MaximizingSubspace sub = maximizing_subspace(t, tol_subspace);
  const CMatrix& v = sub.basis;
  const CMatrix m = (a.data() * v).adjoint() * (t.data() * v);
  const HermitianEigen es = hermitian_eigen((m + m.adjoint()) / 2.0);
  const Eigen::Index k = es.values.size();

  return W0Interval{es.values(0), es.values(k - 1),
                    UnitVector::normalized(v * es.vectors.col(0)).phase_normalized(),
                    UnitVector::normalized(v * es.vectors.col(k - 1)).phase_normalized()};
}

OrthogonalityVerdict is_real_orthogonal(const ComplexMatrix& t, const ComplexMatrix& a, const OrthoOptions& opts) {
  require_nonzero(t, a);
  const double nt = operator_norm(t);
  const double scale = nt * operator_norm(a);
  const double tol_abs = opts.tol * scale;

  const W0Interval w0 = w0_interval(t, a, opts.tol_subspace);
  OrthogonalityVerdict v{false, false, false, std::nullopt};
  v.route_w0 = w0.lo <= tol_abs && w0.hi >= -tol_abs;
  v.w0_distance = (w0.lo > 0.0 ? w0.lo : (w0.hi < 0.0 ? -w0.hi : 0.0)) / scale;

  CenterOptions copts = opts.center;
  copts.tol_subspace = opts.tol_subspace;
  const RealCenterResult center = real_center_of_mass(t, a, copts);
  v.route_norm = norm_route(nt, center.residual, opts.tol, v.norm_drop);

  if (v.route_w0 != v.route_norm) disagree("is_real_orthogonal", v);
  v.orthogonal = v.route_w0;
  if (v.orthogonal) {
    if (w0.lo >= 0.0) {
      v.witness = w0.attaining_lo;
    } else if (w0.hi <= 0.0) {
      v.witness = w0.attaining_hi;
    } else {
      // Eigenvectors of the Hermitian form have no cross term, so the mix
      // w*lo + (1-w)*hi = 0 is attained exactly.
      const double w = w0.hi / (w0.hi - w0.lo);
      v.witness = UnitVector::normalized(std::sqrt(w) * w0.attaining_lo.data() +
                                         std::sqrt(1.0 - w) * w0.attaining_hi.data())
                      .phase_normalized();
    }
  }
  return v;
}

OrthogonalityVerdict is_total_orthogonal(const ComplexMatrix& t, const ComplexMatrix& a, const OrthoOptions& opts) {
  require_nonzero(t, a);
  const double nt = operator_norm(t);
  const double scale = nt * operator_norm(a);

  const MaximizingSubspace sub = maximizing_subspace(t, opts.tol_subspace);
  const CMatrix& basis = sub.basis;
  const CMatrix m = (a.data() * basis).adjoint() * (t.data() * basis);

  CVector c;
  double attained = 0.0;
  if (m.rows() == 1) {
    c = CVector::Ones(1);
    attained = std::abs(m(0, 0));
  } else {
    const SphereObjective obj = [&m](const CVector& x) { return std::norm(x.dot(m * x)); };
    const SphereGradient grad = [&m](const CVector& x) -> CVector {
      const Complex p = x.dot(m * x);
      return 2.0 * (std::conj(p) * (m * x) + p * (m.adjoint() * x));
    };
    const SphereOptResult r = minimize_on_sphere(obj, static_cast<int>(m.rows()), opts.sphere, grad);
    c = r.argmin.data();
    attained = std::sqrt(std::max(r.value, 0.0));
  }

  OrthogonalityVerdict v{false, false, false, std::nullopt};
  v.w0_distance = attained / scale;
  v.route_w0 = v.w0_distance <= opts.tol;

  CenterOptions copts = opts.center;
  copts.tol_subspace = opts.tol_subspace;
  const TotalCenterResult center = total_center_of_mass(t, a, copts);
  v.route_norm = norm_route(nt, center.residual, opts.tol, v.norm_drop);

  if (v.route_w0 != v.route_norm) disagree("is_total_orthogonal", v);
  v.orthogonal = v.route_w0;
  if (v.orthogonal) v.witness = UnitVector::normalized(basis * c).phase_normalized();
  return v;
}

}  // namespace optrig
