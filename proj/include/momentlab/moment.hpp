#ifndef MOMENTLAB_MOMENT_HPP
#define MOMENTLAB_MOMENT_HPP

#include <cstdint>
#include <vector>

#include "momentlab/lie_algebra.hpp"
#include "momentlab/observable.hpp"
#include "momentlab/ode.hpp"
#include "momentlab/rng.hpp"
#include "momentlab/unitary_rep.hpp"

namespace momentlab {

/// The quadratic lift sigma(X)(x) = (1/2) omega(rho'(X) x, x). It is the
/// unique primitive of omega(rho'(X)., .) vanishing at 0, and its gradient
/// field is rho'(X).
template <typename Scalar>
Scalar sigma(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x,
             const VectorXc<Scalar>& state) {
  detail::require(state.size() == rep.dim(), "sigma: mismatched state dimension");
  return omega((rho_prime(rep, x) * state).eval(), state) / Scalar(2);
}

/// sigma(X) as a quadratic observable with operator rho'(X).
template <typename Scalar>
Observable<Scalar> sigma_observable(const UnitaryRep<Scalar>& rep,
                                    const AlgebraElement<Scalar>& x) {
  return Observable<Scalar>::quadratic(rho_prime(rep, x));
}

/// The moment mapping mu(x)(X_i) = sigma(X_i)(x) = (1/2) omega(G_i x, x).
template <typename Scalar>
DualVector<Scalar> moment(const UnitaryRep<Scalar>& rep, const VectorXc<Scalar>& state) {
  detail::require(state.size() == rep.dim(), "moment: mismatched state dimension");
  VectorX<Scalar> coords(rep.algebra().dim());
  for (Index i = 0; i < rep.algebra().dim(); ++i)
    coords(i) = omega((rep.generator(i) * state).eval(), state) / Scalar(2);
  return DualVector<Scalar>(rep.algebra(), std::move(coords));
}

/// The derivative d mu(x): H -> g*, (d mu(x) y)(X) = omega(rho'(X) x, y),
/// as a dim(g) x 2n real matrix against the interleaved real coordinates.
template <typename Scalar>
MatrixX<Scalar> d_moment(const UnitaryRep<Scalar>& rep, const VectorXc<Scalar>& state) {
  detail::require(state.size() == rep.dim(), "d_moment: mismatched state dimension");
  MatrixX<Scalar> m(rep.algebra().dim(), 2 * rep.dim());
  for (Index i = 0; i < rep.algebra().dim(); ++i) {
    const RealCovector<Scalar> row{(rep.generator(i) * state).eval()};
    m.row(i) = row.coefficients().transpose();
  }
  return m;
}

/// The real-linear map g -> H, X |-> rho'(X) x, as a 2n x dim(g) real matrix.
template <typename Scalar>
MatrixX<Scalar> action_matrix(const UnitaryRep<Scalar>& rep, const VectorXc<Scalar>& state) {
  detail::require(state.size() == rep.dim(), "action_matrix: mismatched state dimension");
  MatrixX<Scalar> m(2 * rep.dim(), rep.algebra().dim());
  for (Index i = 0; i < rep.algebra().dim(); ++i)
    m.col(i) = to_real<Scalar>((rep.generator(i) * state).eval());
  return m;
}

/// Orthonormal basis (columns, in g coordinates) of the isotropy algebra
/// g_x = {X : rho'(X) x = 0}, by SVD with threshold 1e-10 sigma_max.
/// x = 0 and the zero action are handled without an SVD.
template <typename Scalar>
MatrixX<Scalar> isotropy_algebra(const UnitaryRep<Scalar>& rep, const VectorXc<Scalar>& state,
                                 Scalar rtol = Scalar(1e-10)) {
  const MatrixX<Scalar> l = action_matrix(rep, state);
  if (l.cwiseAbs().maxCoeff() == Scalar(0))
    return MatrixX<Scalar>::Identity(rep.algebra().dim(), rep.algebra().dim());
  return orthonormal_nullspace(l, rtol);
}

/// Orthonormal real basis (columns, 2n coordinates) of the orbit tangent
/// space T_x = span{rho'(X_i) x}.
template <typename Scalar>
MatrixX<Scalar> orbit_tangent(const UnitaryRep<Scalar>& rep, const VectorXc<Scalar>& state,
                              Scalar rtol = Scalar(1e-10)) {
  const MatrixX<Scalar> l = action_matrix(rep, state);
  if (l.cwiseAbs().maxCoeff() == Scalar(0)) return MatrixX<Scalar>(2 * rep.dim(), 0);
  return orthonormal_range(l, rtol);
}

/// Integrates x' = rho'(X) x from x0 over [0, t] adaptively; the result
/// matches rho(exp(tX)) x0 to well below 1e-8 at the default tolerance.
template <typename Scalar>
VectorXc<Scalar> hamiltonian_flow(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x,
                                  const VectorXc<Scalar>& state0, Scalar t,
                                  Scalar tol = Scalar(1e-10)) {
  detail::require(state0.size() == rep.dim(), "hamiltonian_flow: mismatched state dimension");
  const MatrixXc<Scalar> gen = rho_prime(rep, x);
  return integrate_rk45<Scalar>([&gen](const VectorXc<Scalar>& y) { return (gen * y).eval(); },
                                state0, Scalar(0), t, tol);
}

/// |grad sigma(X)(x) - rho'(X) x| / (1 + |x|) at one state, with the gradient
/// taken through the exact quadratic field or through central differences.
template <typename Scalar>
Scalar grad_sigma_point_defect(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x,
                               const VectorXc<Scalar>& state, bool finite_difference = false) {
  VectorXc<Scalar> g;
  if (finite_difference) {
    const Observable<Scalar> f = Observable<Scalar>::general(
        [&rep, &x](const VectorXc<Scalar>& s) { return sigma(rep, x, s); });
    g = f.finite_difference_gradient(state);
  } else {
    g = sigma_observable(rep, x).gradient(state);
  }
  return (g - rho_prime(rep, x) * state).norm() / (Scalar(1) + state.norm());
}

/// Max of grad_sigma_point_defect over sampled states; must stay below 1e-10
/// on the exact path and 1e-6 on the finite-difference path.
template <typename Scalar>
Scalar grad_sigma_check(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x,
                        Index n_samples = 50, std::uint64_t seed = 12345,
                        bool finite_difference = false) {
  Scalar worst = Scalar(0);
  for (Index k = 0; k < n_samples; ++k) {
    SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(k));
    const VectorXc<Scalar> state = random_state<Scalar>(rng, rep.dim());
    worst = std::max(worst, grad_sigma_point_defect(rep, x, state, finite_difference));
  }
  return worst;
}

/// |{sigma(X), sigma(Y)}(x) - sigma([X,Y])(x)| / (1 + |x|^2) at one state.
template <typename Scalar>
Scalar sigma_homomorphism_point_defect(const UnitaryRep<Scalar>& rep,
                                       const AlgebraElement<Scalar>& x,
                                       const AlgebraElement<Scalar>& y,
                                       const VectorXc<Scalar>& state) {
  const Scalar lhs = poisson(sigma_observable(rep, x), sigma_observable(rep, y), state);
  const Scalar rhs = sigma(rep, bracket(x, y), state);
  return std::abs(lhs - rhs) / (Scalar(1) + state.squaredNorm());
}

/// Max of the scaled homomorphism defect over sampled states.
template <typename Scalar>
Scalar sigma_homomorphism_defect(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x,
                                 const AlgebraElement<Scalar>& y, Index n_samples = 50,
                                 std::uint64_t seed = 12345) {
  Scalar worst = Scalar(0);
  for (Index k = 0; k < n_samples; ++k) {
    SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(k));
    const VectorXc<Scalar> state = random_state<Scalar>(rng, rep.dim());
    worst = std::max(worst, sigma_homomorphism_point_defect(rep, x, y, state));
  }
  return worst;
}

/// |coadjoint(g, mu(x)) - mu(rho(g) x)|_inf, the sides computed through
/// exp(ad) on the algebra and exp(rho') on the space.
template <typename Scalar>
Scalar equivariance_defect(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& g_param,
                           const VectorXc<Scalar>& state) {
  const DualVector<Scalar> lhs = coadjoint(g_param, moment(rep, state));
  const DualVector<Scalar> rhs = moment(rep, (rho(rep, g_param) * state).eval());
  return (lhs.coords - rhs.coords).template lpNorm<Eigen::Infinity>();
}

/// Exact supremum of mu(x)(X) over the unit sphere: the largest eigenvalue of
/// the Hermitian operator -i rho'(X), halved (Rayleigh quotient).
template <typename Scalar>
Scalar support_supremum(const UnitaryRep<Scalar>& rep, const AlgebraElement<Scalar>& x) {
  using Complex = std::complex<Scalar>;
  MatrixXc<Scalar> h = Complex(0, -1) * rho_prime(rep, x);
  h = ((h + h.adjoint()) / Scalar(2)).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXc<Scalar>> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff() / Scalar(2);
}

/// mu evaluated on n_samples Haar-uniform unit vectors, one row per sample.
/// Sample k is drawn from the stream keyed by (seed, k), so the result is
/// identical for any worker-thread count.
template <typename Scalar>
MatrixX<Scalar> sphere_image_sample(const UnitaryRep<Scalar>& rep, Index n_samples,
                                    std::uint64_t seed, int threads = 1) {
  detail::require(n_samples >= 1, "sphere_image_sample: need at least one sample");
  MatrixX<Scalar> out(n_samples, rep.algebra().dim());
  parallel_for(n_samples, threads, [&](Index k) {
    SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(k));
    const VectorXc<Scalar> x = random_unit_state<Scalar>(rng, rep.dim());
    out.row(k) = moment(rep, x).coords.transpose();
  });
  return out;
}

/// Random element with standard normal coordinates, from an explicit stream.
template <typename Scalar>
AlgebraElement<Scalar> random_element(SplitMix64& rng, const LieAlgebra<Scalar>& alg) {
  return AlgebraElement<Scalar>(alg, random_real_vector<Scalar>(rng, alg.dim()));
}

}  // namespace momentlab

#endif
