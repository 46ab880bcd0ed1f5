#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "optrig/errors.hpp"
#include "optrig/oracle.hpp"
#include "optrig/trig.hpp"
#include "support/random_ops.hpp"

namespace optrig {
namespace {

using testing::OpSource;
using testing::diag2;

const double kSqrt2 = std::sqrt(2.0);
const ComplexMatrix kEx = diag2(1.0, Complex(1, 1));

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no optrig::Error thrown";
  return ErrorKind::InvalidArgument;
}

// |z2|^2 = s sweep for 2x2 diagonal T: the objective only depends on s
// and on the relative phase, which does not enter for diagonal T.
double diag_sweep_min(Complex a, Complex b, bool modulus) {
  double best = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    const double s = i / 200000.0;
    const Complex p = (1 - s) * a + s * b;
    const double img = std::sqrt((1 - s) * std::norm(a) + s * std::norm(b));
    best = std::min(best, (modulus ? std::abs(p) : p.real()) / img);
  }
  return best;
}

TEST(CosT, Examples) {
  const auto c = cos_t(kEx);
  EXPECT_NEAR(c.value, 1.0 / kSqrt2, 1e-6);
  EXPECT_NEAR(std::abs(c.vector[1]), 1.0, 1e-4);
  EXPECT_NEAR(cos_t(ComplexMatrix::identity(3)).value, 1.0, 1e-9);
  const double expected = 2.0 * kSqrt2 / 3.0;
  EXPECT_NEAR(cos_t(diag2(1.0, 2.0)).value, expected, 1e-6);
  EXPECT_NEAR(diag_sweep_min(1.0, 2.0, false), expected, 1e-6);
}

TEST(CosT, RejectsNonAccretive) {
  EXPECT_EQ(kind_of([] { cos_t(diag2(1.0, -1.0)); }), ErrorKind::NotAccretive);
  EXPECT_EQ(kind_of([] { sin_t(diag2(1.0, 0.0)); }), ErrorKind::NotAccretive);
  EXPECT_EQ(kind_of([] { minmax_check_real(diag2(Complex(0, 1), 1.0)); }), ErrorKind::NotAccretive);
}

TEST(TotalCosT, Examples) {
  const auto c = total_cos_t(kEx);
  EXPECT_NEAR(c.value, std::sqrt(2.0 * kSqrt2 - 2.0), 1e-6);
  EXPECT_NEAR(std::norm(c.vector[1]), kSqrt2 - 1.0, 1e-4);
  EXPECT_FALSE(c.restricted);
  EXPECT_NEAR(total_cos_t(ComplexMatrix::identity(2)).value, 1.0, 1e-9);
  EXPECT_NEAR(total_cos_t(diag2(1.0, Complex(0, 1))).value, 1.0 / kSqrt2, 1e-6);
  EXPECT_NEAR(diag_sweep_min(1.0, Complex(0, 1), true), 1.0 / kSqrt2, 1e-6);
}

TEST(TotalCosT, SingularNeedsOptIn) {
  EXPECT_EQ(kind_of([] { total_cos_t(diag2(1.0, 0.0)); }), ErrorKind::SingularOperator);
  const auto r = total_cos_t(diag2(1.0, 0.0), {}, true);
  EXPECT_TRUE(r.restricted);
  // |<Tx,x>| / |Tx| = |z1| here, so the restricted infimum sits at the guard
  EXPECT_GE(r.value, 1e-8 - 1e-15);
  EXPECT_LE(r.value, 1e-6);
}

TEST(SinT, Examples) {
  const auto s = sin_t(kEx);
  EXPECT_NEAR(s.value, std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(s.epsilon0, 0.5, 1e-6);
  const auto id = sin_t(ComplexMatrix::identity(2));
  EXPECT_NEAR(id.value, 0.0, 1e-8);
  EXPECT_NEAR(id.epsilon0, 1.0, 1e-8);
}

TEST(SinT, IdentityWithCosOnRandomAccretive) {
  OpSource src(51);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix t = src.accretive(3);
    const double c = cos_t(t).value;
    const double s = sin_t(t).value;
    EXPECT_NEAR(s * s + c * c, 1.0, 1e-6);
  }
}

TEST(OptimalScalars, Examples) {
  EXPECT_NEAR(epsilon_opt(kEx, UnitVector::basis(2, 1)), 0.5, 1e-15);
  OpSource src(52);
  const CVector y = src.unit(3);
  EXPECT_NEAR(epsilon_opt(ComplexMatrix::identity(3), UnitVector(y)), 1.0, 1e-14);

  const double s = kSqrt2 - 1.0;
  CVector z(2);
  z << std::sqrt(1.0 - s), std::sqrt(s);
  const Complex lam = lambda_opt(kEx, UnitVector(z));
  EXPECT_NEAR(lam.real(), 1.0 / kSqrt2, 1e-12);
  EXPECT_NEAR(lam.imag(), -(kSqrt2 - 1.0) / kSqrt2, 1e-12);
  EXPECT_NEAR((lam * (kEx.data() * z) - z).squaredNorm(), 3.0 - 2.0 * kSqrt2, 1e-12);

  EXPECT_EQ(kind_of([] { epsilon_opt(diag2(1.0, 0.0), UnitVector::basis(2, 1)); }), ErrorKind::ZeroImage);
  EXPECT_EQ(kind_of([] { lambda_opt(diag2(1.0, 0.0), UnitVector::basis(2, 1)); }), ErrorKind::ZeroImage);
}

TEST(OptimalScalars, ClosedFormBeatsGrid) {
  OpSource src(53);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = src.dim();
    const ComplexMatrix t = src.invertible(n);
    const UnitVector y(src.unit(n));
    const CVector ty = t.data() * y.data();
    const double e = epsilon_opt(t, y);
    const double re = y.data().dot(ty).real();
    const double at_e = (e * ty - y.data()).squaredNorm();
    EXPECT_NEAR(at_e, 1.0 - re * re / ty.squaredNorm(), 1e-10);
    if (rep % 10 == 0) {
      for (int i = 0; i < 100; ++i) {
        const double g = -3.0 + 6.0 * i / 99.0;
        EXPECT_LE(at_e, (g * ty - y.data()).squaredNorm() + 1e-12);
      }
    }
  }
}

TEST(Minmax, Examples) {
  const auto r = minmax_check_real(kEx);
  EXPECT_NEAR(r.lhs, 0.5, 1e-6);
  EXPECT_NEAR(r.rhs, 0.5, 1e-6);
  EXPECT_NEAR(r.epsilon0, 0.5, 1e-6);
  const auto c = minmax_check_complex(kEx);
  EXPECT_NEAR(c.lhs, 3.0 - 2.0 * kSqrt2, 1e-6);
  EXPECT_NEAR(c.rhs, 3.0 - 2.0 * kSqrt2, 1e-6);

  const auto ri = minmax_check_real(ComplexMatrix::identity(2));
  EXPECT_NEAR(ri.lhs, 0.0, 1e-9);
  EXPECT_NEAR(ri.rhs, 0.0, 1e-9);
  const auto ci = minmax_check_complex(ComplexMatrix::identity(2));
  EXPECT_NEAR(ci.lhs, 0.0, 1e-9);
  EXPECT_NEAR(ci.rhs, 0.0, 1e-9);
  EXPECT_NEAR(std::abs(ci.lambda0 - 1.0), 0.0, 1e-6);
}

TEST(Minmax, GapsOnRandomOperators) {
  OpSource src(54);
  for (int rep = 0; rep < 15; ++rep) {
    EXPECT_LE(minmax_check_real(src.accretive(src.dim())).gap(), 1e-5);
    EXPECT_LE(minmax_check_complex(src.invertible(src.dim())).gap(), 1e-5);
  }
}

TEST(ViaCenter, Examples) {
  const auto r = cos_via_center(kEx);
  EXPECT_NEAR(r.value, 1.0 / kSqrt2, 1e-6);
  EXPECT_NEAR(r.epsilon0, 0.5, 1e-6);
  EXPECT_NEAR(std::abs(r.witness[1]), 1.0, 1e-6);
  EXPECT_NEAR(cos_via_center(ComplexMatrix::identity(2)).value, 1.0, 1e-9);
  EXPECT_NEAR(cos_via_center(diag2(1.0, 2.0)).value, cos_t(diag2(1.0, 2.0)).value, 1e-6);

  const auto c = total_cos_via_center(kEx);
  EXPECT_NEAR(c.value, std::sqrt(2.0 * kSqrt2 - 2.0), 1e-6);
  EXPECT_NEAR(c.lambda0.real(), 1.0 / kSqrt2, 1e-6);
  EXPECT_NEAR(c.lambda0.imag(), -(kSqrt2 - 1.0) / kSqrt2, 1e-6);
  EXPECT_NEAR(total_cos_via_center(ComplexMatrix::identity(2)).value, 1.0, 1e-9);
  const ComplexMatrix di = diag2(1.0, Complex(0, 1));
  EXPECT_NEAR(total_cos_via_center(di).value, total_cos_t(di).value, 1e-6);
}

TEST(ViaCenter, RoutesAgreeOnRandomOperators) {
  OpSource src(55);
  for (int rep = 0; rep < 25; ++rep) {
    const ComplexMatrix t = src.accretive(src.dim());
    EXPECT_NEAR(cos_t(t).value, cos_via_center(t).value, 1e-5);
    const ComplexMatrix u = src.invertible(src.dim());
    EXPECT_NEAR(total_cos_t(u).value, total_cos_via_center(u).value, 1e-5);
  }
}

TEST(Trig, BoundsAndInvariances) {
  OpSource src(56);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = src.dim();
    const ComplexMatrix t = src.accretive(n);
    const double c = cos_t(t).value;
    EXPECT_GT(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
    EXPECT_GE(total_cos_t(t).value, c - 1e-9);

    const double scale = src.uniform(0.1, 10.0);
    EXPECT_NEAR(cos_t(ComplexMatrix(CMatrix(scale * t.data()))).value, c, 1e-7);
    const Complex phase = std::polar(1.0, src.uniform(0.0, 2.0 * std::numbers::pi));
    EXPECT_NEAR(total_cos_t(ComplexMatrix(CMatrix(phase * t.data()))).value, total_cos_t(t).value, 1e-7);
    const CMatrix u = src.unitary(n);
    EXPECT_NEAR(cos_t(ComplexMatrix(CMatrix(u.adjoint() * t.data() * u))).value, c, 1e-6);
  }
}

TEST(Trig, OracleFromFeasibleSide) {
  OpSource src(57);
  for (int rep = 0; rep < 4; ++rep) {
    const int n = 2 + rep % 3;
    const ComplexMatrix t = src.accretive(n);
    const CMatrix& m = t.data();
    const auto o = oracle::sphere_sample_min(
        [&m](const CVector& x) {
          const CVector tx = m * x;
          return x.dot(tx).real() / tx.norm();
        },
        n, oracle::SampleOptions{});
    const double c = cos_t(t).value;
    EXPECT_LE(c, o.value + 1e-9);
    EXPECT_GE(c, o.value - 1e-3);
  }
}

TEST(TrigReport, ConsistentOnExample) {
  const auto r = trig_report(kEx);
  EXPECT_TRUE(r.consistent(1e-5));
  EXPECT_NEAR(r.sin_value, std::sqrt(0.5), 1e-6);
  const auto tr = total_trig_report(kEx);
  EXPECT_TRUE(tr.consistent(1e-5));
}

}  // namespace
}  // namespace optrig
