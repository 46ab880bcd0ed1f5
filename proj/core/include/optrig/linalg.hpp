#pragma once

// Dense complex linear algebra on C^n used by every other optrig module.
//
// Conventions:
//   inner(u, v) = sum_i u_i * conj(v_i)   (linear in the first slot)
//   real gradients of f: C^n -> R are packed as complex vectors
//   g_k = df/d(Re x_k) + i df/d(Im x_k).

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace optrig {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Square complex operator on C^n with finite entries, n >= 1.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(CMatrix m);

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(std::initializer_list<Complex> d);
  static ComplexMatrix zero(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& data() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

 private:
  CMatrix m_;
};

/// Complex n-vector of unit Euclidean norm (within 1e-12).
class UnitVector {
 public:
  /// Validates the norm; throws InvalidArgument if it is not 1.
  explicit UnitVector(CVector v);

  /// Rescales v to unit length. Throws InvalidArgument for a (near) zero v.
  static UnitVector normalized(const CVector& v);
  static UnitVector basis(int n, int k);

  int dim() const { return static_cast<int>(v_.size()); }
  const CVector& data() const { return v_; }
  Complex operator[](int k) const { return v_(k); }

  /// Same ray with the first nonzero component rotated onto the positive real axis.
  UnitVector phase_normalized() const;

 private:
  CVector v_;
};

/// Orthonormal basis (columns) of the right singular vectors with
/// sigma >= (1 - tol) * sigma_max.
struct MaximizingSubspace {
  CMatrix basis;
  double sigma_max = 0.0;

  int dim() const { return static_cast<int>(basis.cols()); }
  UnitVector vector(int k) const { return UnitVector(basis.col(k)); }
};

inline constexpr double kDefaultSubspaceTol = 1e-8;

double operator_norm(const ComplexMatrix& t);
double operator_norm(const CMatrix& t);

/// Smallest singular value; 0 is in the approximate point spectrum iff this is 0.
double min_singular_value(const ComplexMatrix& t);

MaximizingSubspace maximizing_subspace(const ComplexMatrix& t, double tol_subspace = kDefaultSubspaceTol);
MaximizingSubspace maximizing_subspace(const CMatrix& t, double tol_subspace = kDefaultSubspaceTol);

/// Minimum eigenvalue of the Hermitian part (T + T*)/2. T is strongly
/// accretive iff this is positive.
double hermitian_min_eig(const ComplexMatrix& t);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEigen {
  Eigen::VectorXd values;
  CMatrix vectors;
};
HermitianEigen hermitian_eigen(const CMatrix& h);

Complex inner(const CVector& u, const CVector& v);
CVector apply(const ComplexMatrix& t, const CVector& x);
ComplexMatrix adjoint(const ComplexMatrix& t);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context);
void require_same_dim(const ComplexMatrix& a, const CVector& x, const char* context);

}  // namespace optrig
