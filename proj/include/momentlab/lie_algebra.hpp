#ifndef MOMENTLAB_LIE_ALGEBRA_HPP
#define MOMENTLAB_LIE_ALGEBRA_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "momentlab/linalg.hpp"
#include "momentlab/types.hpp"

namespace momentlab {

/// Finite-dimensional real Lie algebra given by structure constants
/// c(i,j,k), meaning [X_i, X_j] = sum_k c(i,j,k) X_k. Construction validates
/// antisymmetry and the Jacobi identity and fails otherwise. Immutable.
template <typename Scalar>
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> structure_constants)
      : m_labels(std::move(labels)), m_c(std::move(structure_constants)) {
    const Index n = dim();
    detail::require(n >= 1, "LieAlgebra: dimension must be positive");
    detail::require(static_cast<Index>(m_c.size()) == n * n * n,
                    "LieAlgebra: structure constant array must have dim^3 entries");
    validate();
    m_ad_basis.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      MatrixX<Scalar> adi = MatrixX<Scalar>::Zero(n, n);
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) adi(k, j) = c(i, j, k);
      m_ad_basis.push_back(std::move(adi));
    }
  }

  Index dim() const { return static_cast<Index>(m_labels.size()); }
  const std::vector<std::string>& labels() const { return m_labels; }

  /// Coefficient of X_k in [X_i, X_j].
  Scalar c(Index i, Index j, Index k) const {
    return m_c[static_cast<std::size_t>((i * dim() + j) * dim() + k)];
  }

  /// Matrix of ad(X_i) = [X_i, .] in the basis.
  const MatrixX<Scalar>& ad_basis(Index i) const {
    return m_ad_basis[static_cast<std::size_t>(i)];
  }

  /// Coordinates of [x, y] from the structure constants.
  VectorX<Scalar> bracket_coords(const VectorX<Scalar>& x, const VectorX<Scalar>& y) const {
    detail::require(x.size() == dim() && y.size() == dim(),
                    "LieAlgebra::bracket_coords: coordinate length mismatch");
    VectorX<Scalar> out = VectorX<Scalar>::Zero(dim());
    for (Index i = 0; i < dim(); ++i) out.noalias() += x(i) * (m_ad_basis[static_cast<std::size_t>(i)] * y);
    return out;
  }

  bool same_structure(const LieAlgebra& other) const {
    return dim() == other.dim() && m_c == other.m_c;
  }

  /// The algebra of su(2) with X_k = -(i/2) sigma_k, so c(0,1,2) = 1 cyclically.
  static LieAlgebra su2() {
    std::vector<Scalar> c(27, Scalar(0));
    auto set = [&c](Index i, Index j, Index k, Scalar v) {
      c[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = v;
      c[static_cast<std::size_t>((j * 3 + i) * 3 + k)] = -v;
    };
    set(0, 1, 2, Scalar(1));
    set(1, 2, 0, Scalar(1));
    set(2, 0, 1, Scalar(1));
    return LieAlgebra({"X1", "X2", "X3"}, std::move(c));
  }

  /// Abelian algebra of the n-torus (all structure constants zero).
  static LieAlgebra abelian(Index n, const std::string& prefix = "T") {
    detail::require(n >= 1, "LieAlgebra::abelian: dimension must be positive");
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
    return LieAlgebra(std::move(labels), std::vector<Scalar>(static_cast<std::size_t>(n * n * n), Scalar(0)));
  }

 private:
  void validate() const {
    const Index n = dim();
    Scalar cmax = Scalar(0);
    for (const Scalar v : m_c) cmax = std::max(cmax, std::abs(v));
    const Scalar anti_tol = Scalar(1e-12) * (Scalar(1) + cmax);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          detail::require(std::abs(c(i, j, k) + c(j, i, k)) <= anti_tol,
                          "LieAlgebra: structure constants are not antisymmetric");
    const Scalar jacobi_tol = Scalar(1e-10) * (Scalar(1) + cmax) * (Scalar(1) + cmax);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          for (Index l = 0; l < n; ++l) {
            Scalar s = Scalar(0);
            for (Index m = 0; m < n; ++m)
              s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
            detail::require(std::abs(s) <= jacobi_tol,
                            "LieAlgebra: structure constants violate the Jacobi identity");
          }
  }

  std::vector<std::string> m_labels;
  std::vector<Scalar> m_c;
  std::vector<MatrixX<Scalar>> m_ad_basis;
};

/// Element of a Lie algebra, as coordinates against the basis. Holds a
/// non-owning pointer; the algebra must outlive its elements.
template <typename Scalar>
struct AlgebraElement {
  const LieAlgebra<Scalar>* algebra = nullptr;
  VectorX<Scalar> coords;

  AlgebraElement() = default;
  AlgebraElement(const LieAlgebra<Scalar>& alg, VectorX<Scalar> c)
      : algebra(&alg), coords(std::move(c)) {
    detail::require(coords.size() == alg.dim(), "AlgebraElement: coordinate length mismatch");
  }
};

/// Element of the dual space, coords[i] = value on basis element X_i.
template <typename Scalar>
struct DualVector {
  const LieAlgebra<Scalar>* algebra = nullptr;
  VectorX<Scalar> coords;

  DualVector() = default;
  DualVector(const LieAlgebra<Scalar>& alg, VectorX<Scalar> c)
      : algebra(&alg), coords(std::move(c)) {
    detail::require(coords.size() == alg.dim(), "DualVector: coordinate length mismatch");
  }
};

namespace detail {
template <typename Scalar>
const LieAlgebra<Scalar>& common_algebra(const LieAlgebra<Scalar>* a, const LieAlgebra<Scalar>* b,
                                         const char* who) {
  require(a != nullptr && b != nullptr, std::string(who) + ": element has no algebra");
  require(a == b || a->same_structure(*b), std::string(who) + ": mismatched Lie algebras");
  return *a;
}
}  // namespace detail

template <typename Scalar>
AlgebraElement<Scalar> bracket(const AlgebraElement<Scalar>& x, const AlgebraElement<Scalar>& y) {
  const auto& alg = detail::common_algebra(x.algebra, y.algebra, "bracket");
  return AlgebraElement<Scalar>(alg, alg.bracket_coords(x.coords, y.coords));
}

/// Matrix of ad(x) = [x, .] in the basis.
template <typename Scalar>
MatrixX<Scalar> ad(const AlgebraElement<Scalar>& x) {
  detail::require(x.algebra != nullptr, "ad: element has no algebra");
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(x.algebra->dim(), x.algebra->dim());
  for (Index i = 0; i < x.algebra->dim(); ++i) m += x.coords(i) * x.algebra->ad_basis(i);
  return m;
}

/// Adjoint action of the group element exp(g_param): Ad(exp(g)) = exp(ad(g)).
template <typename Scalar>
MatrixX<Scalar> Ad(const AlgebraElement<Scalar>& g_param) {
  return expm_real<Scalar>(ad(g_param));
}

/// Coadjoint action of exp(g_param) on the dual: the coordinate matrix is the
/// transpose of Ad(exp(-g_param)), so that <Ad'(g) a, Ad(g) x> = <a, x>.
template <typename Scalar>
DualVector<Scalar> coadjoint(const AlgebraElement<Scalar>& g_param, const DualVector<Scalar>& alpha) {
  const auto& alg = detail::common_algebra(g_param.algebra, alpha.algebra, "coadjoint");
  const AlgebraElement<Scalar> neg(alg, (-g_param.coords).eval());
  return DualVector<Scalar>(alg, (Ad(neg).transpose() * alpha.coords).eval());
}

/// Natural pairing <alpha, x>.
template <typename Scalar>
Scalar pairing(const DualVector<Scalar>& alpha, const AlgebraElement<Scalar>& x) {
  detail::common_algebra(alpha.algebra, x.algebra, "pairing");
  return alpha.coords.dot(x.coords);
}

}  // namespace momentlab

#endif
