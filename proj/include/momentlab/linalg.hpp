#ifndef MOMENTLAB_LINALG_HPP
#define MOMENTLAB_LINALG_HPP

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "momentlab/types.hpp"

namespace momentlab {

/// Matrix exponential of a real square matrix (Pade scaling-and-squaring).
template <typename Scalar>
MatrixX<Scalar> expm_real(const MatrixX<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "expm_real: matrix must be square");
  return a.exp();
}

/// Matrix exponential of a skew-Hermitian matrix through the unitary
/// eigendecomposition of iA, so the result is unitary to machine precision.
/// Falls back to scaling-and-squaring when A is not skew-Hermitian.
template <typename Scalar>
MatrixXc<Scalar> expm_skew_hermitian(const MatrixXc<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "expm_skew_hermitian: matrix must be square");
  const Scalar scale = Scalar(1) + a.cwiseAbs().maxCoeff();
  const Scalar skew_defect = (a + a.adjoint()).cwiseAbs().maxCoeff();
  if (skew_defect > Scalar(1e-8) * scale) return a.exp();

  using Complex = std::complex<Scalar>;
  MatrixXc<Scalar> h = Complex(0, 1) * a;   // Hermitian
  h = ((h + h.adjoint()) / Scalar(2)).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXc<Scalar>> es(h);
  VectorXc<Scalar> phases(a.rows());
  for (Index k = 0; k < a.rows(); ++k)
    phases(k) = std::exp(Complex(0, -es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

template <typename Scalar>
MatrixXc<Scalar> kron(const MatrixXc<Scalar>& a, const MatrixXc<Scalar>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// Rank of a real matrix by SVD with threshold rtol * sigma_max.
template <typename Scalar>
Index svd_rank(const MatrixX<Scalar>& m, Scalar rtol = Scalar(1e-10)) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == Scalar(0)) return 0;
  Index r = 0;
  while (r < sv.size() && sv(r) > rtol * sv(0)) ++r;
  return r;
}

/// Orthonormal basis of the range (columns) of a real matrix.
template <typename Scalar>
MatrixX<Scalar> orthonormal_range(const MatrixX<Scalar>& m, Scalar rtol = Scalar(1e-10)) {
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(m, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(0) > Scalar(0) && sv(r) > rtol * sv(0)) ++r;
  return svd.matrixU().leftCols(r);
}

/// Orthonormal basis of the nullspace of a real matrix.
template <typename Scalar>
MatrixX<Scalar> orthonormal_nullspace(const MatrixX<Scalar>& m, Scalar rtol = Scalar(1e-10)) {
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(0) > Scalar(0) && sv(r) > rtol * sv(0)) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

}  // namespace momentlab

#endif
