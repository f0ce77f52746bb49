#ifndef MOMENTLAB_SYMPLECTIC_HPP
#define MOMENTLAB_SYMPLECTIC_HPP

#include <utility>

#include "momentlab/types.hpp"

namespace momentlab {

// Conventions, pinned once for the whole library:
//   - <x,y> is linear in the first slot and conjugate-linear in the second,
//     <x,y> = sum_k x_k conj(y_k).
//   - omega(x,y) = Im<x,y>, which forces Re<x,y> = omega(i x, y).
//   - Real coordinates interleave as (Re x_1, Im x_1, Re x_2, Im x_2, ...).

/// Hermitian inner product, linear in the first slot.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar inner(const Eigen::MatrixBase<DerivedA>& x,
                                const Eigen::MatrixBase<DerivedB>& y) {
  detail::require(x.size() == y.size(), "inner: mismatched state dimensions");
  return y.dot(x);  // Eigen's dot conjugates its call target
}

/// The symplectic form omega(x,y) = Im<x,y>.
template <typename DerivedA, typename DerivedB>
auto omega(const Eigen::MatrixBase<DerivedA>& x, const Eigen::MatrixBase<DerivedB>& y) {
  return std::imag(inner(x, y));
}

template <typename Scalar>
VectorX<Scalar> to_real(const VectorXc<Scalar>& x) {
  VectorX<Scalar> r(2 * x.size());
  for (Index k = 0; k < x.size(); ++k) {
    r(2 * k) = x(k).real();
    r(2 * k + 1) = x(k).imag();
  }
  return r;
}

template <typename Scalar>
VectorXc<Scalar> from_real(const VectorX<Scalar>& r) {
  detail::require(r.size() % 2 == 0, "from_real: odd real dimension");
  VectorXc<Scalar> x(r.size() / 2);
  for (Index k = 0; k < x.size(); ++k) x(k) = std::complex<Scalar>(r(2 * k), r(2 * k + 1));
  return x;
}

/// Matrix J of omega in the interleaved real coordinates: omega(x,y) = xr^T J yr.
template <typename Scalar>
MatrixX<Scalar> omega_matrix(Index n) {
  MatrixX<Scalar> j = MatrixX<Scalar>::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    j(2 * k, 2 * k + 1) = Scalar(-1);
    j(2 * k + 1, 2 * k) = Scalar(1);
  }
  return j;
}

/// A real-linear functional on H represented by the vector w with
/// l(y) = omega(w, y). The representer is unique (omega is nondegenerate).
template <typename Scalar>
struct RealCovector {
  VectorXc<Scalar> w;

  Scalar operator()(const VectorXc<Scalar>& y) const { return omega(w, y); }

  /// Coefficients c with l(y) = c . to_real(y).
  VectorX<Scalar> coefficients() const {
    VectorX<Scalar> c(2 * w.size());
    for (Index k = 0; k < w.size(); ++k) {
      c(2 * k) = w(k).imag();
      c(2 * k + 1) = -w(k).real();
    }
    return c;
  }

  /// Inverse of coefficients(): the representer of y |-> c . to_real(y).
  static RealCovector from_coefficients(const VectorX<Scalar>& c) {
    detail::require(c.size() % 2 == 0, "RealCovector::from_coefficients: odd dimension");
    VectorXc<Scalar> w(c.size() / 2);
    for (Index k = 0; k < w.size(); ++k) w(k) = std::complex<Scalar>(-c(2 * k + 1), c(2 * k));
    return RealCovector{std::move(w)};
  }
};

/// The injective map omega_flat(x) = omega(x, .).
template <typename Scalar>
RealCovector<Scalar> omega_flat(const VectorXc<Scalar>& x) {
  return RealCovector<Scalar>{x};
}

/// Inverse of omega_flat (total in finite dimension).
template <typename Scalar>
VectorXc<Scalar> omega_sharp(const RealCovector<Scalar>& l) {
  return l.w;
}

/// Complex representation space with dim >= 1. Nondegeneracy of omega (the
/// real matrix of omega_flat has full rank 2n) is asserted at construction.
template <typename Scalar>
class HilbertSpace {
 public:
  explicit HilbertSpace(Index dim) : m_dim(dim) {
    detail::require(dim >= 1, "HilbertSpace: dimension must be positive");
    Eigen::FullPivLU<MatrixX<Scalar>> lu(omega_matrix<Scalar>(dim));
    detail::require(lu.rank() == 2 * dim, "HilbertSpace: omega is degenerate");
    // Slot-convention invariant Re<x,y> = omega(i x, y) on all real basis pairs.
    const std::complex<Scalar> i_unit(0, 1);
    for (Index j = 0; j < dim; ++j)
      for (Index k = 0; k < dim; ++k) {
        VectorXc<Scalar> ej = basis_vector(j), ek = basis_vector(k);
        detail::require(std::abs(std::real(inner(ej, ek)) - omega((i_unit * ej).eval(), ek)) <=
                                Scalar(1e-12) &&
                            std::abs(std::real(inner((i_unit * ej).eval(), ek)) -
                                     omega((i_unit * i_unit * ej).eval(), ek)) <= Scalar(1e-12),
                        "HilbertSpace: Re<x,y> = omega(ix,y) convention violated");
      }
  }

  Index dim() const { return m_dim; }
  Index real_dim() const { return 2 * m_dim; }

  VectorXc<Scalar> zero() const { return VectorXc<Scalar>::Zero(m_dim); }
  VectorXc<Scalar> basis_vector(Index k) const {
    detail::require(k >= 0 && k < m_dim, "HilbertSpace::basis_vector: index out of range");
    return VectorXc<Scalar>::Unit(m_dim, k);
  }

  bool operator==(const HilbertSpace& other) const { return m_dim == other.m_dim; }

 private:
  Index m_dim;
};

/// True iff the linear field A satisfies omega(A y1, y2) = -omega(y1, A y2)
/// on all real basis pairs, i.e. its flow preserves omega.
template <typename Scalar>
bool is_locally_hamiltonian(const MatrixXc<Scalar>& a, Scalar tol = Scalar(1e-10)) {
  detail::require(a.rows() == a.cols(), "is_locally_hamiltonian: matrix must be square");
  const Index n = a.rows();
  std::vector<VectorXc<Scalar>> basis;
  basis.reserve(static_cast<std::size_t>(2 * n));
  for (Index k = 0; k < n; ++k) {
    basis.push_back(VectorXc<Scalar>::Unit(n, k));
    basis.push_back(std::complex<Scalar>(0, 1) * VectorXc<Scalar>::Unit(n, k));
  }
  const Scalar scale = Scalar(1) + a.cwiseAbs().maxCoeff();
  for (const auto& y1 : basis)
    for (const auto& y2 : basis)
      if (std::abs(omega((a * y1).eval(), y2) + omega(y1, (a * y2).eval())) > tol * scale)
        return false;
  return true;
}

}  // namespace momentlab

#endif
