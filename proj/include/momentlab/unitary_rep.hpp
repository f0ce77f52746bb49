#ifndef MOMENTLAB_UNITARY_REP_HPP
#define MOMENTLAB_UNITARY_REP_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "momentlab/lie_algebra.hpp"
#include "momentlab/linalg.hpp"
#include "momentlab/symplectic.hpp"

namespace momentlab {

/// Defect report for the two representation invariants: every generator is
/// skew-Hermitian, and rho' respects the bracket of the structure constants.
template <typename Scalar>
struct RepReport {
  std::vector<Scalar> skew_defects;          // max |G_i + G_i^H| per generator
  MatrixX<Scalar> homomorphism_defects;      // per pair (i,j)
  Scalar max_skew = Scalar(0);
  Scalar max_homomorphism = Scalar(0);
  Scalar skew_tolerance = Scalar(0);
  Scalar homomorphism_tolerance = Scalar(0);
  bool pass = false;
  Index worst_skew_index = -1;
};

struct unchecked_t {};
inline constexpr unchecked_t unchecked{};

/// A unitary representation in infinitesimal form: generators[i] = rho'(X_i),
/// skew-Hermitian matrices satisfying rho'([X_i,X_j]) = [rho'(X_i), rho'(X_j)].
/// The checking constructor throws if either invariant fails. Immutable.
template <typename Scalar>
class UnitaryRep {
 public:
  UnitaryRep(LieAlgebra<Scalar> algebra, std::vector<MatrixXc<Scalar>> generators,
             Scalar skew_tol = Scalar(1e-12), Scalar hom_tol = Scalar(1e-10))
      : UnitaryRep(std::move(algebra), std::move(generators), unchecked) {
    const auto report = verify_rep(*this, skew_tol, hom_tol);
    if (!report.pass) {
      detail::require(report.max_skew <= skew_tol,
                      "UnitaryRep: generator " + std::to_string(report.worst_skew_index) +
                          " is not skew-Hermitian (defect " +
                          std::to_string(static_cast<double>(report.max_skew)) + ")");
      detail::require(false, "UnitaryRep: generators do not represent the bracket (defect " +
                                 std::to_string(static_cast<double>(report.max_homomorphism)) +
                                 ")");
    }
  }

  UnitaryRep(LieAlgebra<Scalar> algebra, std::vector<MatrixXc<Scalar>> generators, unchecked_t)
      : m_algebra(std::move(algebra)),
        m_space(generators.empty() ? 1 : generators.front().rows()),
        m_generators(std::move(generators)) {
    detail::require(static_cast<Index>(m_generators.size()) == m_algebra.dim(),
                    "UnitaryRep: one generator per basis element required");
    for (const auto& g : m_generators)
      detail::require(g.rows() == m_space.dim() && g.cols() == m_space.dim(),
                      "UnitaryRep: generators must be square of equal dimension");
  }

  const LieAlgebra<Scalar>& algebra() const { return m_algebra; }
  const HilbertSpace<Scalar>& space() const { return m_space; }
  Index dim() const { return m_space.dim(); }
  const std::vector<MatrixXc<Scalar>>& generators() const { return m_generators; }
  const MatrixXc<Scalar>& generator(Index i) const {
    return m_generators[static_cast<std::size_t>(i)];
  }

  AlgebraElement<Scalar> element(VectorX<Scalar> coords) const {
    return AlgebraElement<Scalar>(m_algebra, std::move(coords));
  }

 private:
  LieAlgebra<Scalar> m_algebra;
  HilbertSpace<Scalar> m_space;
  std::vector<MatrixXc<Scalar>> m_generators;
};

/// rho'(X) = sum_i coords[i] generators[i].
template <typename Scalar>
MatrixXc<Scalar> rho_prime(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x) {
  detail::common_algebra(&rep.algebra(), x.algebra, "rho_prime");
  MatrixXc<Scalar> m = MatrixXc<Scalar>::Zero(rep.dim(), rep.dim());
  for (Index i = 0; i < rep.algebra().dim(); ++i) m += x.coords(i) * rep.generator(i);
  return m;
}

/// Group-level action rho(exp(g_param)) = exp(rho'(g_param)), unitary.
template <typename Scalar>
MatrixXc<Scalar> rho(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& g_param) {
  return expm_skew_hermitian<Scalar>(rho_prime(rep, g_param));
}

template <typename Scalar>
RepReport<Scalar> verify_rep(const UnitaryRep<Scalar>& rep, Scalar skew_tol = Scalar(1e-12),
                             Scalar hom_tol = Scalar(1e-10)) {
  const Index n = rep.algebra().dim();
  RepReport<Scalar> report;
  report.skew_tolerance = skew_tol;
  report.homomorphism_tolerance = hom_tol;
  report.skew_defects.resize(static_cast<std::size_t>(n));
  report.homomorphism_defects = MatrixX<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Scalar d = (rep.generator(i) + rep.generator(i).adjoint()).cwiseAbs().maxCoeff();
    report.skew_defects[static_cast<std::size_t>(i)] = d;
    if (d > report.max_skew) {
      report.max_skew = d;
      report.worst_skew_index = i;
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      MatrixXc<Scalar> lhs = MatrixXc<Scalar>::Zero(rep.dim(), rep.dim());
      for (Index k = 0; k < n; ++k) lhs += rep.algebra().c(i, j, k) * rep.generator(k);
      const MatrixXc<Scalar> rhs =
          rep.generator(i) * rep.generator(j) - rep.generator(j) * rep.generator(i);
      report.homomorphism_defects(i, j) = (lhs - rhs).cwiseAbs().maxCoeff();
    }
  report.max_homomorphism = report.homomorphism_defects.maxCoeff();
  report.pass = report.max_skew <= skew_tol && report.max_homomorphism <= hom_tol;
  return report;
}

/// Irreducible su(2) representation of spin j on C^(2j+1), built from ladder
/// operators. Basis ordering: descending eigenvalue of J3 = i rho'(X3), so the
/// first basis vector is the highest-weight state with rho'(X3) e1 = -i j e1.
template <typename Scalar>
UnitaryRep<Scalar> su2_spin(Scalar j) {
  using Complex = std::complex<Scalar>;
  const Scalar twice = Scalar(2) * j;
  detail::require(j >= Scalar(0) && std::abs(twice - std::round(twice)) < Scalar(1e-9),
                  "su2_spin: spin must be a nonnegative half-integer");
  const Index two_j = static_cast<Index>(std::llround(static_cast<double>(twice)));
  const Index n = two_j + 1;

  MatrixXc<Scalar> jz = MatrixXc<Scalar>::Zero(n, n);
  MatrixXc<Scalar> jplus = MatrixXc<Scalar>::Zero(n, n);
  for (Index k = 0; k < n; ++k) jz(k, k) = j - static_cast<Scalar>(k);
  for (Index k = 1; k < n; ++k)
    jplus(k - 1, k) = std::sqrt(static_cast<Scalar>(k) * static_cast<Scalar>(two_j - k + 1));
  const MatrixXc<Scalar> jminus = jplus.adjoint();
  const MatrixXc<Scalar> jx = (jplus + jminus) / Scalar(2);
  const MatrixXc<Scalar> jy = (jplus - jminus) / Complex(0, 2);

  const Complex minus_i(0, -1);
  std::vector<MatrixXc<Scalar>> gens = {minus_i * jx, minus_i * jy, minus_i * jz};
  return UnitaryRep<Scalar>(LieAlgebra<Scalar>::su2(), std::move(gens));
}

/// Diagonal torus representation: generator i acts on the k-th coordinate as
/// multiplication by i * weights(k, i). One weight row per complex dimension.
template <typename Scalar>
UnitaryRep<Scalar> torus_rep(Index torus_dim, const MatrixX<Scalar>& weights) {
  detail::require(torus_dim >= 1, "torus_rep: torus dimension must be positive");
  detail::require(weights.rows() >= 1 && weights.cols() == torus_dim,
                  "torus_rep: one weight per torus generator required");
  const Index n = weights.rows();
  std::vector<MatrixXc<Scalar>> gens;
  gens.reserve(static_cast<std::size_t>(torus_dim));
  for (Index i = 0; i < torus_dim; ++i) {
    MatrixXc<Scalar> g = MatrixXc<Scalar>::Zero(n, n);
    for (Index k = 0; k < n; ++k) g(k, k) = std::complex<Scalar>(0, weights(k, i));
    gens.push_back(std::move(g));
  }
  return UnitaryRep<Scalar>(LieAlgebra<Scalar>::abelian(torus_dim), std::move(gens));
}

template <typename Scalar>
UnitaryRep<Scalar> direct_sum(const UnitaryRep<Scalar>& r1, const UnitaryRep<Scalar>& r2) {
  detail::common_algebra(&r1.algebra(), &r2.algebra(), "direct_sum");
  const Index n1 = r1.dim(), n2 = r2.dim();
  std::vector<MatrixXc<Scalar>> gens;
  gens.reserve(static_cast<std::size_t>(r1.algebra().dim()));
  for (Index i = 0; i < r1.algebra().dim(); ++i) {
    MatrixXc<Scalar> g = MatrixXc<Scalar>::Zero(n1 + n2, n1 + n2);
    g.topLeftCorner(n1, n1) = r1.generator(i);
    g.bottomRightCorner(n2, n2) = r2.generator(i);
    gens.push_back(std::move(g));
  }
  return UnitaryRep<Scalar>(r1.algebra(), std::move(gens));
}

/// Tensor product action: generators A (x) I + I (x) B.
template <typename Scalar>
UnitaryRep<Scalar> tensor_product(const UnitaryRep<Scalar>& r1, const UnitaryRep<Scalar>& r2) {
  detail::common_algebra(&r1.algebra(), &r2.algebra(), "tensor_product");
  const MatrixXc<Scalar> id1 = MatrixXc<Scalar>::Identity(r1.dim(), r1.dim());
  const MatrixXc<Scalar> id2 = MatrixXc<Scalar>::Identity(r2.dim(), r2.dim());
  std::vector<MatrixXc<Scalar>> gens;
  gens.reserve(static_cast<std::size_t>(r1.algebra().dim()));
  for (Index i = 0; i < r1.algebra().dim(); ++i)
    gens.push_back(kron<Scalar>(r1.generator(i), id2) + kron<Scalar>(id1, r2.generator(i)));
  return UnitaryRep<Scalar>(r1.algebra(), std::move(gens));
}

}  // namespace momentlab

#endif
