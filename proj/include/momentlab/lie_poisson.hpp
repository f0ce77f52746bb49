#ifndef MOMENTLAB_LIE_POISSON_HPP
#define MOMENTLAB_LIE_POISSON_HPP

#include <functional>
#include <utility>

#include "momentlab/lie_algebra.hpp"

namespace momentlab {

/// Smooth real function on g* with a computable gradient df(alpha) in g.
/// Without a gradient handle, df is assembled by central differences with
/// step h = 1e-5 (1 + |alpha|).
template <typename Scalar>
class DualObservable {
 public:
  using ValueFn = std::function<Scalar(const VectorX<Scalar>&)>;
  using GradientFn = std::function<VectorX<Scalar>(const VectorX<Scalar>&)>;

  DualObservable(ValueFn value, GradientFn gradient = nullptr)
      : m_value(std::move(value)), m_gradient(std::move(gradient)) {
    detail::require(static_cast<bool>(m_value), "DualObservable: value handle required");
  }

  /// f_X(alpha) = <alpha, X>; the gradient is the constant X.
  static DualObservable linear(const AlgebraElement<Scalar>& x) {
    VectorX<Scalar> coords = x.coords;
    return DualObservable(
        [coords](const VectorX<Scalar>& alpha) { return alpha.dot(coords); },
        [coords](const VectorX<Scalar>&) { return coords; });
  }

  /// f(alpha) = (1/2) alpha^T Q alpha + b . alpha with Q symmetric.
  static DualObservable quadratic(MatrixX<Scalar> q, VectorX<Scalar> b,
                                  bool exact_gradient = true) {
    detail::require(q.rows() == q.cols() && q.rows() == b.size(),
                    "DualObservable::quadratic: inconsistent dimensions");
    q = ((q + q.transpose()) / Scalar(2)).eval();
    ValueFn value = [q, b](const VectorX<Scalar>& a) {
      return Scalar(0.5) * a.dot(q * a) + b.dot(a);
    };
    if (!exact_gradient) return DualObservable(std::move(value));
    return DualObservable(std::move(value),
                          [q, b](const VectorX<Scalar>& a) { return (q * a + b).eval(); });
  }

  static DualObservable constant(Scalar c) {
    return DualObservable([c](const VectorX<Scalar>&) { return c; },
                          [](const VectorX<Scalar>& a) { return VectorX<Scalar>::Zero(a.size()).eval(); });
  }

  Scalar value(const VectorX<Scalar>& alpha) const { return m_value(alpha); }

  VectorX<Scalar> gradient(const VectorX<Scalar>& alpha) const {
    if (m_gradient) return m_gradient(alpha);
    const Scalar h = Scalar(1e-5) * (Scalar(1) + alpha.norm());
    VectorX<Scalar> df(alpha.size());
    for (Index i = 0; i < alpha.size(); ++i) {
      VectorX<Scalar> up = alpha, dn = alpha;
      up(i) += h;
      dn(i) -= h;
      df(i) = (m_value(up) - m_value(dn)) / (Scalar(2) * h);
    }
    return df;
  }

 private:
  ValueFn m_value;
  GradientFn m_gradient;
};

/// Lie-Poisson bracket on g*: {f1,f2}(alpha) = <alpha, [df1(alpha), df2(alpha)]>.
template <typename Scalar>
Scalar lie_poisson_bracket(const DualObservable<Scalar>& f1, const DualObservable<Scalar>& f2,
                           const DualVector<Scalar>& alpha) {
  detail::require(alpha.algebra != nullptr, "lie_poisson_bracket: dual vector has no algebra");
  const auto& alg = *alpha.algebra;
  const VectorX<Scalar> d1 = f1.gradient(alpha.coords);
  const VectorX<Scalar> d2 = f2.gradient(alpha.coords);
  return alpha.coords.dot(alg.bracket_coords(d1, d2));
}

}  // namespace momentlab

#endif
