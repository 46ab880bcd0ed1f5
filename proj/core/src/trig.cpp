#include "optrig/trig.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "optrig/errors.hpp"

namespace optrig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kImageGuard = 1e-12;
constexpr double kSingularGuard = 1e-8;
constexpr double kPositiveFloor = 1e-12;

// Quantities shared by all objectives: p = <Tx,x>, s2 = |Tx|^2 and the
// pieces of their gradients.
struct Rayleigh {
  CVector tx;
  Complex p;
  double s2;
};

class TrigForms {
 public:
  explicit TrigForms(const ComplexMatrix& t)
      : t_(t.data()), th_(t.data().adjoint()), herm2_(t.data() + t.data().adjoint()), gram_(th_ * t_) {}

  Rayleigh at(const CVector& x) const {
    CVector tx = t_ * x;
    const Complex p = x.dot(tx);
    return {tx, p, tx.squaredNorm()};
  }

  // Re<Tx,x> / |Tx|
  double real_ratio(const CVector& x, double guard) const {
    const Rayleigh r = at(x);
    if (r.s2 < guard * guard) return kInf;
    return r.p.real() / std::sqrt(r.s2);
  }

  CVector real_ratio_grad(const CVector& x) const {
    const Rayleigh r = at(x);
    const double s = std::sqrt(r.s2);
    return herm2_ * x / s - r.p.real() * (gram_ * x) / (r.s2 * s);
  }

  // |<Tx,x>|^2 / |Tx|^2
  double modulus_ratio2(const CVector& x, double guard) const {
    const Rayleigh r = at(x);
    if (r.s2 < guard * guard) return kInf;
    return std::norm(r.p) / r.s2;
  }

  CVector modulus_ratio2_grad(const CVector& x) const {
    const Rayleigh r = at(x);
    const CVector grad_p2 = 2.0 * (std::conj(r.p) * r.tx + r.p * (th_ * x));
    return grad_p2 / r.s2 - std::norm(r.p) * 2.0 * (gram_ * x) / (r.s2 * r.s2);
  }

  // Re<Tx,x>^2 / |Tx|^2
  double real_ratio2(const CVector& x, double guard) const {
    const Rayleigh r = at(x);
    if (r.s2 < guard * guard) return kInf;
    return r.p.real() * r.p.real() / r.s2;
  }

  CVector real_ratio2_grad(const CVector& x) const {
    const Rayleigh r = at(x);
    const double re = r.p.real();
    return 2.0 * re * (herm2_ * x) / r.s2 - re * re * 2.0 * (gram_ * x) / (r.s2 * r.s2);
  }

 private:
  CMatrix t_;
  CMatrix th_;
  CMatrix herm2_;  // T + T^H, the real gradient of Re<Tx,x>
  CMatrix gram_;   // T^H T
};

}  // namespace

void require_accretive(const ComplexMatrix& t) {
  const double m = hermitian_min_eig(t);
  if (!(m > 0.0)) {
    throw Error(ErrorKind::NotAccretive,
                "T is not strongly accretive: min eigenvalue of (T+T*)/2 is " + std::to_string(m));
  }
}

void require_invertible(const ComplexMatrix& t) {
  const double smin = min_singular_value(t);
  const double nt = operator_norm(t);
  if (!(nt > 0.0) || smin <= 1e-12 * nt) {
    throw Error(ErrorKind::SingularOperator, "T is singular: sigma_min = " + std::to_string(smin));
  }
}

Antieigen cos_t(const ComplexMatrix& t, const SphereOptConfig& cfg) {
  require_accretive(t);
  const TrigForms forms(t);
  const SphereOptResult r = minimize_on_sphere(
      [&forms](const CVector& x) { return forms.real_ratio(x, kImageGuard); }, t.dim(), cfg,
      [&forms](const CVector& x) { return forms.real_ratio_grad(x); });
  return Antieigen{r.value, r.argmin};
}

Antieigen total_cos_t(const ComplexMatrix& t, const SphereOptConfig& cfg, bool allow_singular) {
  bool restricted = false;
  if (allow_singular) {
    restricted = min_singular_value(t) <= 1e-12 * operator_norm(t);
    if (!(operator_norm(t) > 0.0)) throw Error(ErrorKind::SingularOperator, "T is the zero operator");
  } else {
    require_invertible(t);
  }
  const double guard = restricted ? kSingularGuard : kImageGuard;
  const TrigForms forms(t);
  const SphereOptResult r = minimize_on_sphere(
      [&forms, guard](const CVector& x) { return forms.modulus_ratio2(x, guard); }, t.dim(), cfg,
      [&forms](const CVector& x) { return forms.modulus_ratio2_grad(x); });
  return Antieigen{std::sqrt(std::max(r.value, 0.0)), r.argmin, restricted};
}

SinResult sin_t(const ComplexMatrix& t, const CenterOptions& opts) {
  require_accretive(t);
  const ComplexMatrix id = ComplexMatrix::identity(t.dim());
  CenterOptions o = opts;
  o.real_interval = std::make_pair(kPositiveFloor, 2.0 / operator_norm(t));
  const RealCenterResult c = real_center_of_mass(id, t, o);
  // Strong accretivity puts the unconstrained minimizer strictly inside eps > 0.
  if (!(c.epsilon0 > 2.0 * kPositiveFloor)) {
    throw std::logic_error("sin_t: minimizer reached the eps > 0 boundary for an accretive operator");
  }
  return SinResult{c.residual, c.epsilon0};
}

double epsilon_opt(const ComplexMatrix& t, const UnitVector& y) {
  require_same_dim(t, y.data(), "epsilon_opt");
  const CVector ty = t.data() * y.data();
  const double s2 = ty.squaredNorm();
  if (std::sqrt(s2) < kImageGuard) throw Error(ErrorKind::ZeroImage, "|Ty| < 1e-12");
  return y.data().dot(ty).real() / s2;
}

Complex lambda_opt(const ComplexMatrix& t, const UnitVector& y) {
  require_same_dim(t, y.data(), "lambda_opt");
  const CVector ty = t.data() * y.data();
  const double s2 = ty.squaredNorm();
  if (std::sqrt(s2) < kImageGuard) throw Error(ErrorKind::ZeroImage, "|Ty| < 1e-12");
  // <y, Ty> = (Ty)^H y
  return ty.dot(y.data()) / s2;
}

RealMinmax minmax_check_real(const ComplexMatrix& t, const SphereOptConfig& cfg, const CenterOptions& opts) {
  require_accretive(t);
  const TrigForms forms(t);
  // inner inf over eps > 0 in closed form: 1 - Re<Tx,x>^2 / |Tx|^2
  const SphereOptResult sup = maximize_on_sphere(
      [&forms](const CVector& x) { return 1.0 - forms.real_ratio2(x, kImageGuard); }, t.dim(), cfg,
      [&forms](const CVector& x) -> CVector { return -forms.real_ratio2_grad(x); });
  const SinResult s = sin_t(t, opts);
  return RealMinmax{sup.value, s.value * s.value, s.epsilon0, sup.argmin};
}

ComplexMinmax minmax_check_complex(const ComplexMatrix& t, const SphereOptConfig& cfg, const CenterOptions& opts) {
  require_invertible(t);
  const TrigForms forms(t);
  const SphereOptResult sup = maximize_on_sphere(
      [&forms](const CVector& x) { return 1.0 - forms.modulus_ratio2(x, kImageGuard); }, t.dim(), cfg,
      [&forms](const CVector& x) -> CVector { return -forms.modulus_ratio2_grad(x); });
  const TotalCenterResult c = total_center_of_mass(ComplexMatrix::identity(t.dim()), t, opts);
  return ComplexMinmax{sup.value, c.residual * c.residual, c.lambda0, sup.argmin};
}

RealViaCenter cos_via_center(const ComplexMatrix& t, const CenterOptions& opts) {
  require_accretive(t);
  const RealCenterResult c = real_center_of_mass(ComplexMatrix::identity(t.dim()), t, opts);
  const CVector& x = c.witness.data();
  const CVector tx = t.data() * x;
  return RealViaCenter{x.dot(tx).real() / tx.norm(), c.witness, c.epsilon0};
}

TotalViaCenter total_cos_via_center(const ComplexMatrix& t, const CenterOptions& opts) {
  require_invertible(t);
  const TotalCenterResult c = total_center_of_mass(ComplexMatrix::identity(t.dim()), t, opts);
  const CVector& x = c.witness.data();
  const CVector tx = t.data() * x;
  return TotalViaCenter{std::abs(x.dot(tx)) / tx.norm(), c.witness, c.lambda0};
}

TrigReport trig_report(const ComplexMatrix& t, const TrigOptions& opts) {
  const Antieigen direct = cos_t(t, opts.sphere);
  const RealViaCenter via = cos_via_center(t, opts.center);
  const RealMinmax mm = minmax_check_real(t, opts.sphere, opts.center);
  return TrigReport{direct.value, via.value, direct.vector, mm.epsilon0, std::sqrt(mm.rhs), mm.lhs, mm.rhs};
}

TotalTrigReport total_trig_report(const ComplexMatrix& t, const TrigOptions& opts) {
  const Antieigen direct = total_cos_t(t, opts.sphere);
  const TotalViaCenter via = total_cos_via_center(t, opts.center);
  const ComplexMinmax mm = minmax_check_complex(t, opts.sphere, opts.center);
  return TotalTrigReport{direct.value, via.value, direct.vector, mm.lambda0, mm.lhs, mm.rhs};
}

}  // namespace optrig
