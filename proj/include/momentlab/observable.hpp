#ifndef MOMENTLAB_OBSERVABLE_HPP
#define MOMENTLAB_OBSERVABLE_HPP

#include <functional>
#include <utility>

#include "momentlab/symplectic.hpp"

namespace momentlab {

/// Smooth real function on H with a computable omega-gradient.
///
/// Quadratic observables f(x) = (1/2) omega(A x, x) carry the exact linear
/// gradient field x |-> A x; the stored operator must satisfy the symmetry
/// omega(A x, y) = omega(A y, x), which is asserted at construction (for a
/// complex-linear A this is skew-Hermitian-ness). General observables either
/// supply a gradient handle or fall back to central finite differences with
/// step h = 1e-5 (1 + |x|).
template <typename Scalar>
class Observable {
 public:
  enum class Kind { Quadratic, General };

  using ValueFn = std::function<Scalar(const VectorXc<Scalar>&)>;
  using GradientFn = std::function<VectorXc<Scalar>(const VectorXc<Scalar>&)>;

  static Observable quadratic(MatrixXc<Scalar> op, Scalar symmetry_tol = Scalar(1e-10)) {
    detail::require(op.rows() == op.cols(), "Observable::quadratic: operator must be square");
    const Index n = op.rows();
    const Scalar scale = Scalar(1) + op.cwiseAbs().maxCoeff();
    for (Index i = 0; i < 2 * n; ++i)
      for (Index j = 0; j < 2 * n; ++j) {
        const VectorXc<Scalar> yi = real_basis(n, i);
        const VectorXc<Scalar> yj = real_basis(n, j);
        detail::require(
            std::abs(omega((op * yi).eval(), yj) - omega((op * yj).eval(), yi)) <=
                symmetry_tol * scale,
            "Observable::quadratic: omega(Ax,y) = omega(Ay,x) fails; operator is not "
            "skew-Hermitian");
      }
    Observable f;
    f.m_kind = Kind::Quadratic;
    f.m_op = std::move(op);
    return f;
  }

  static Observable general(ValueFn value, GradientFn gradient = nullptr) {
    detail::require(static_cast<bool>(value), "Observable::general: value handle required");
    Observable f;
    f.m_kind = Kind::General;
    f.m_value = std::move(value);
    f.m_gradient = std::move(gradient);
    return f;
  }

  static Observable constant(Scalar c) {
    return general([c](const VectorXc<Scalar>&) { return c; },
                   [](const VectorXc<Scalar>& x) { return VectorXc<Scalar>::Zero(x.size()).eval(); });
  }

  Kind kind() const { return m_kind; }
  bool has_exact_gradient() const {
    return m_kind == Kind::Quadratic || static_cast<bool>(m_gradient);
  }
  const MatrixXc<Scalar>& op() const {
    detail::require(m_kind == Kind::Quadratic, "Observable::op: not a quadratic observable");
    return m_op;
  }

  Scalar value(const VectorXc<Scalar>& x) const {
    if (m_kind == Kind::Quadratic) {
      detail::require(x.size() == m_op.rows(), "Observable::value: mismatched state dimension");
      return omega((m_op * x).eval(), x) / Scalar(2);
    }
    return m_value(x);
  }

  /// grad f(x), the unique field with df(x)y = omega(grad f(x), y).
  VectorXc<Scalar> gradient(const VectorXc<Scalar>& x) const {
    if (m_kind == Kind::Quadratic) {
      detail::require(x.size() == m_op.rows(), "Observable::gradient: mismatched state dimension");
      return m_op * x;
    }
    if (m_gradient) return m_gradient(x);
    return finite_difference_gradient(x);
  }

  /// Assembles df(x) by central differences over the real coordinate
  /// directions and pulls it back through omega.
  VectorXc<Scalar> finite_difference_gradient(const VectorXc<Scalar>& x) const {
    const Scalar h = Scalar(1e-5) * (Scalar(1) + x.norm());
    const Index n = x.size();
    VectorX<Scalar> df(2 * n);
    for (Index r = 0; r < 2 * n; ++r) {
      const VectorXc<Scalar> dir = real_basis(n, r);
      df(r) = (value((x + h * dir).eval()) - value((x - h * dir).eval())) / (Scalar(2) * h);
    }
    return omega_sharp(RealCovector<Scalar>::from_coefficients(df));
  }

 private:
  static VectorXc<Scalar> real_basis(Index n, Index r) {
    VectorXc<Scalar> e = VectorXc<Scalar>::Zero(n);
    e(r / 2) = (r % 2 == 0) ? std::complex<Scalar>(1, 0) : std::complex<Scalar>(0, 1);
    return e;
  }

  Kind m_kind = Kind::General;
  MatrixXc<Scalar> m_op;
  ValueFn m_value;
  GradientFn m_gradient;
};

template <typename Scalar>
VectorXc<Scalar> grad(const Observable<Scalar>& f, const VectorXc<Scalar>& x) {
  return f.gradient(x);
}

/// Poisson bracket {f,g}(x) = omega(grad f(x), grad g(x)).
/// Orientation invariant: for quadratic observables with operators A, B this
/// equals (1/2) omega([A,B]x, x), so sigma below is a Lie algebra homomorphism.
template <typename Scalar>
Scalar poisson(const Observable<Scalar>& f, const Observable<Scalar>& g,
               const VectorXc<Scalar>& x) {
  return omega(f.gradient(x), g.gradient(x));
}

/// The bracket of two quadratic observables is quadratic with the commutator
/// operator: {f,g} = (1/2) omega([A_f, A_g] x, x).
template <typename Scalar>
Observable<Scalar> poisson_quadratic(const Observable<Scalar>& f, const Observable<Scalar>& g) {
  detail::require(f.kind() == Observable<Scalar>::Kind::Quadratic &&
                      g.kind() == Observable<Scalar>::Kind::Quadratic,
                  "poisson_quadratic: both observables must be quadratic");
  return Observable<Scalar>::quadratic(f.op() * g.op() - g.op() * f.op());
}

}  // namespace momentlab

#endif
