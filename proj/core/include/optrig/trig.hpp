#pragma once

// Operator trigonometry on C^n:
//   cos T   = min_{|x|=1} Re<Tx,x> / |Tx|          (T strongly accretive)
//   |cos| T = min_{|x|=1} |<Tx,x>| / |Tx|          (T invertible)
//   sin T   = min_{eps>0} |eps T - I|
// each computed directly by sphere optimization and, independently, through
// the real/total center of mass of I relative to T.

#include "optrig/center_of_mass.hpp"
#include "optrig/linalg.hpp"
#include "optrig/sphere_opt.hpp"

namespace optrig {

struct Antieigen {
  double value;
  UnitVector vector;
  // total_cos_t with allow_singular: the infimum was taken over |Tx| >= 1e-8 only.
  bool restricted = false;
};

struct SinResult {
  double value;
  double epsilon0;
};

struct RealViaCenter {
  double value;
  UnitVector witness;
  double epsilon0;
};

struct TotalViaCenter {
  double value;
  UnitVector witness;
  Complex lambda0;
};

struct RealMinmax {
  double lhs;  // sup_x inf_{eps>0} |(eps T - I)x|^2
  double rhs;  // inf_{eps>0} sup_x |(eps T - I)x|^2
  double epsilon0;
  UnitVector sup_vector;

  double gap() const { return std::abs(lhs - rhs); }
};

struct ComplexMinmax {
  double lhs;
  double rhs;
  Complex lambda0;
  UnitVector sup_vector;

  double gap() const { return std::abs(lhs - rhs); }
};

/// Throws NotAccretive unless hermitian_min_eig(T) > 0.
void require_accretive(const ComplexMatrix& t);
/// Throws SingularOperator if sigma_min(T) <= 1e-12 |T|.
void require_invertible(const ComplexMatrix& t);

Antieigen cos_t(const ComplexMatrix& t, const SphereOptConfig& cfg = {});
Antieigen total_cos_t(const ComplexMatrix& t, const SphereOptConfig& cfg = {}, bool allow_singular = false);
SinResult sin_t(const ComplexMatrix& t, const CenterOptions& opts = {});

/// Minimizer of eps -> |(eps T - I) y|^2: Re<Ty,y> / |Ty|^2.
double epsilon_opt(const ComplexMatrix& t, const UnitVector& y);
/// Minimizer of lambda -> |(lambda T - I) y|^2: <y,Ty> / |Ty|^2.
Complex lambda_opt(const ComplexMatrix& t, const UnitVector& y);

RealMinmax minmax_check_real(const ComplexMatrix& t, const SphereOptConfig& cfg = {}, const CenterOptions& opts = {});
ComplexMinmax minmax_check_complex(const ComplexMatrix& t, const SphereOptConfig& cfg = {},
                                   const CenterOptions& opts = {});

RealViaCenter cos_via_center(const ComplexMatrix& t, const CenterOptions& opts = {});
TotalViaCenter total_cos_via_center(const ComplexMatrix& t, const CenterOptions& opts = {});

struct TrigOptions {
  SphereOptConfig sphere;
  CenterOptions center;
  double cross_tol = 1e-5;
};

struct TrigReport {
  double cos_direct;
  double cos_via_center;
  UnitVector antieigenvector;
  double epsilon0;
  double sin_value;
  double minmax_lhs;
  double minmax_rhs;

  double route_delta() const { return std::abs(cos_direct - cos_via_center); }
  double identity_delta() const { return std::abs(sin_value * sin_value + cos_direct * cos_direct - 1.0); }
  double minmax_delta() const { return std::abs(minmax_lhs - minmax_rhs); }
  bool consistent(double cross_tol) const {
    return route_delta() <= cross_tol && identity_delta() <= cross_tol && minmax_delta() <= cross_tol;
  }
};

struct TotalTrigReport {
  double total_cos_direct;
  double total_cos_via_center;
  UnitVector antieigenvector;
  Complex lambda0;
  double minmax_lhs;
  double minmax_rhs;

  double route_delta() const { return std::abs(total_cos_direct - total_cos_via_center); }
  double minmax_delta() const { return std::abs(minmax_lhs - minmax_rhs); }
  bool consistent(double cross_tol) const { return route_delta() <= cross_tol && minmax_delta() <= cross_tol; }
};

TrigReport trig_report(const ComplexMatrix& t, const TrigOptions& opts = {});
TotalTrigReport total_trig_report(const ComplexMatrix& t, const TrigOptions& opts = {});

}  // namespace optrig
