#include <gtest/gtest.h>

#include <cmath>

#include "optrig/center_of_mass.hpp"
#include "optrig/errors.hpp"
#include "optrig/ortho.hpp"
#include "optrig/sphere_opt.hpp"
#include "support/random_ops.hpp"

namespace optrig {
namespace {

using testing::OpSource;
using testing::diag2;

const ComplexMatrix kT10 = diag2(1.0, 0.0);
const ComplexMatrix kA01 = diag2(0.0, 1.0);

TEST(W0Interval, Examples) {
  const auto a = w0_interval(kT10, kA01);
  EXPECT_NEAR(a.lo, 0.0, 1e-14);
  EXPECT_NEAR(a.hi, 0.0, 1e-14);

  const auto b = w0_interval(ComplexMatrix::identity(3), ComplexMatrix::identity(3));
  EXPECT_NEAR(b.lo, 1.0, 1e-14);
  EXPECT_NEAR(b.hi, 1.0, 1e-14);

  const ComplexMatrix ex = diag2(1.0, Complex(1, 1));
  const auto c = w0_interval(ex, ComplexMatrix::identity(2));
  EXPECT_NEAR(c.lo, 1.0, 1e-12);
  EXPECT_NEAR(c.hi, 1.0, 1e-12);

  // sampling cross-check: unit vectors whose image nearly attains the norm
  OpSource src(41);
  int kept = 0;
  for (int k = 0; k < 10000; ++k) {
    const CVector x = src.unit(2);
    if ((ex.data() * x).norm() < std::sqrt(2.0) - 1e-6) continue;
    ++kept;
    EXPECT_NEAR(x.dot(ex.data() * x).real(), 1.0, 1e-5);
  }
  SUCCEED() << kept << " samples near the norm";
}

TEST(W0Interval, ZeroOperatorThrows) {
  EXPECT_THROW(w0_interval(ComplexMatrix::zero(2), ComplexMatrix::identity(2)), Error);
}

TEST(W0Interval, SamplesStayInsideAndTargetsAreAttained) {
  OpSource src(42);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = src.dim(2, 4);
    const int k = src.dim(2, n);
    const ComplexMatrix t = src.top_multiplicity(n, k);
    const ComplexMatrix a(src.gaussian(n));
    const auto w0 = w0_interval(t, a);
    const auto sub = maximizing_subspace(t);
    ASSERT_EQ(sub.dim(), k);
    const CMatrix m = (a.data() * sub.basis).adjoint() * (t.data() * sub.basis);
    for (int s = 0; s < 1000; ++s) {
      const CVector c = src.unit(k);
      EXPECT_TRUE(w0.contains(c.dot(m * c).real(), 1e-8));
    }
    for (int j = 1; j <= 20; ++j) {
      const double target = w0.lo + (w0.hi - w0.lo) * j / 21.0;
      const auto hit = minimize_on_sphere(
          [&](const CVector& c) {
            const double d = c.dot(m * c).real() - target;
            return d * d;
          },
          k, {});
      EXPECT_LE(std::sqrt(hit.value), 1e-6);
    }
  }
}

TEST(RealOrthogonal, Examples) {
  const auto v = is_real_orthogonal(kT10, kA01);
  EXPECT_TRUE(v.orthogonal);
  EXPECT_TRUE(v.route_w0);
  EXPECT_TRUE(v.route_norm);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_NEAR(std::abs((*v.witness)[0]), 1.0, 1e-12);

  const auto w = is_real_orthogonal(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  EXPECT_FALSE(w.orthogonal);
  EXPECT_FALSE(w.route_w0);
  EXPECT_FALSE(w.route_norm);
}

TEST(TotalOrthogonal, Examples) {
  EXPECT_TRUE(is_total_orthogonal(kT10, kA01).orthogonal);
  const auto v = is_total_orthogonal(diag2(1.0, Complex(1, 1)), ComplexMatrix::identity(2));
  EXPECT_FALSE(v.orthogonal);
}

TEST(Orthogonality, RemaindersAreOrthogonal) {
  OpSource src(43);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = src.dim();
    const ComplexMatrix t(src.gaussian(n));
    const ComplexMatrix a(src.gaussian(n));
    const auto rc = real_center_of_mass(t, a);
    const ComplexMatrix b(CMatrix(t.data() - rc.epsilon0 * a.data()));
    EXPECT_TRUE(is_real_orthogonal(b, a).orthogonal);

    const auto tc = total_center_of_mass(t, a);
    const ComplexMatrix c(CMatrix(t.data() - tc.lambda0 * a.data()));
    const auto v = is_total_orthogonal(c, a);
    EXPECT_TRUE(v.orthogonal);
    EXPECT_TRUE(is_real_orthogonal(c, a).orthogonal);
  }
}

TEST(Orthogonality, RoutesAgreeTotalImpliesRealAndHomogeneity) {
  OpSource src(44);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = src.dim();
    ComplexMatrix t(src.gaussian(n));
    const ComplexMatrix a(src.gaussian(n));
    if (rep % 3 == 1) t = ComplexMatrix(CMatrix(t.data() - real_center_of_mass(t, a).epsilon0 * a.data()));
    if (rep % 3 == 2) t = src.top_multiplicity(n, 2);

    const auto real = is_real_orthogonal(t, a);  // throws RouteDisagreement on mismatch
    EXPECT_EQ(real.route_w0, real.route_norm);
    const auto total = is_total_orthogonal(t, a);
    if (total.orthogonal) EXPECT_TRUE(real.orthogonal);

    const double c1 = src.uniform(0.1, 10.0);
    const double c2 = src.uniform(0.1, 10.0);
    const ComplexMatrix ts(CMatrix(c1 * t.data()));
    const ComplexMatrix as(CMatrix(c2 * a.data()));
    EXPECT_EQ(is_real_orthogonal(ts, as).orthogonal, real.orthogonal);
    EXPECT_EQ(is_total_orthogonal(ts, as).orthogonal, total.orthogonal);
  }
}

}  // namespace
}  // namespace optrig
