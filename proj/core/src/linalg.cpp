#include "optrig/linalg.hpp"

#include <cmath>
#include <string>

#include "optrig/errors.hpp"

namespace optrig {

namespace {

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ComplexMatrix::ComplexMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw Error(ErrorKind::InvalidArgument,
                "operator must be square with n >= 1, got " + std::to_string(m_.rows()) + "x" +
                    std::to_string(m_.cols()));
  }
  if (!all_finite(m_)) {
    throw Error(ErrorKind::InvalidArgument, "operator has non-finite entries");
  }
}

ComplexMatrix ComplexMatrix::identity(int n) { return ComplexMatrix(CMatrix::Identity(n, n)); }

ComplexMatrix ComplexMatrix::zero(int n) { return ComplexMatrix(CMatrix::Zero(n, n)); }

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  CMatrix m = CMatrix::Zero(n, n);
  Eigen::Index k = 0;
  for (const Complex& v : d) {
    m(k, k) = v;
    ++k;
  }
  return ComplexMatrix(std::move(m));
}

UnitVector::UnitVector(CVector v) : v_(std::move(v)) {
  if (v_.size() < 1 || std::abs(v_.norm() - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "vector is not of unit norm");
  }
}

UnitVector UnitVector::normalized(const CVector& v) {
  const double nrm = v.norm();
  if (!(nrm > 1e-300) || !std::isfinite(nrm)) {
    throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  CVector u = v / nrm;
  // one correction pass keeps | |u| - 1 | at rounding level
  u /= u.norm();
  return UnitVector(std::move(u));
}

UnitVector UnitVector::basis(int n, int k) {
  CVector e = CVector::Zero(n);
  e(k) = 1.0;
  return UnitVector(std::move(e));
}

UnitVector UnitVector::phase_normalized() const {
  const double threshold = 1e-12;
  for (Eigen::Index k = 0; k < v_.size(); ++k) {
    const double mag = std::abs(v_(k));
    if (mag > threshold) {
      const Complex phase = std::conj(v_(k)) / mag;
      CVector rotated = v_ * phase;
      rotated(k) = Complex(mag, 0.0);
      return UnitVector::normalized(rotated);
    }
  }
  return *this;
}

double operator_norm(const CMatrix& t) {
  if (t.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(t);
  return svd.singularValues()(0);
}

double operator_norm(const ComplexMatrix& t) { return operator_norm(t.data()); }

double min_singular_value(const ComplexMatrix& t) {
  Eigen::JacobiSVD<CMatrix> svd(t.data());
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

MaximizingSubspace maximizing_subspace(const CMatrix& t, double tol_subspace) {
  if (!(tol_subspace >= 0.0 && tol_subspace < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "tol_subspace must lie in [0, 1)");
  }
  Eigen::JacobiSVD<CMatrix> svd(t, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double sigma_max = s(0);
  if (!(sigma_max > 0.0)) {
    throw Error(ErrorKind::ZeroOperator, "maximizing subspace of the zero operator");
  }
  Eigen::Index k = 1;
  while (k < s.size() && s(k) >= (1.0 - tol_subspace) * sigma_max) ++k;

  MaximizingSubspace out;
  out.sigma_max = sigma_max;
  out.basis = svd.matrixV().leftCols(k);
  return out;
}

MaximizingSubspace maximizing_subspace(const ComplexMatrix& t, double tol_subspace) {
  return maximizing_subspace(t.data(), tol_subspace);
}

HermitianEigen hermitian_eigen(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  return {es.eigenvalues(), es.eigenvectors()};
}

double hermitian_min_eig(const ComplexMatrix& t) {
  const CMatrix h = (t.data() + t.data().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Complex inner(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "inner: vectors of different length");
  }
  // Eigen's dot is conjugate-linear in its first argument.
  return v.dot(u);
}

CVector apply(const ComplexMatrix& t, const CVector& x) {
  require_same_dim(t, x, "apply");
  return t.data() * x;
}

ComplexMatrix adjoint(const ComplexMatrix& t) { return ComplexMatrix(t.data().adjoint()); }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(context) + ": operators of dimension " +
                                                  std::to_string(a.dim()) + " and " +
                                                  std::to_string(b.dim()));
  }
}

void require_same_dim(const ComplexMatrix& a, const CVector& x, const char* context) {
  if (a.dim() != x.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(context) + ": operator of dimension " +
                                                  std::to_string(a.dim()) + ", vector of length " +
                                                  std::to_string(x.size()));
  }
}

}  // namespace optrig
