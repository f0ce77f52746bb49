#ifndef MOMENTLAB_ODE_HPP
#define MOMENTLAB_ODE_HPP

#include <algorithm>
#include <cmath>
#include <sstream>

#include "momentlab/types.hpp"

namespace momentlab {

/// Adaptive Dormand-Prince RK5(4) for x' = f(x) on a complex state vector.
/// Local error is controlled against atol = rtol = tol per component.
template <typename Scalar, typename Deriv>
VectorXc<Scalar> integrate_rk45(const Deriv& f, VectorXc<Scalar> y, Scalar t0, Scalar t1,
                                Scalar tol = Scalar(1e-10), long max_steps = 200000) {
  if (t0 == t1) return y;
  const Scalar direction = t1 > t0 ? Scalar(1) : Scalar(-1);

  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  Scalar t = t0;
  Scalar h = direction * std::max(std::abs(t1 - t0) / Scalar(100), Scalar(1e-6));
  for (long step = 0; step < max_steps; ++step) {
    if (direction * (t + h - t1) > Scalar(0)) h = t1 - t;

    const VectorXc<Scalar> k1 = f(y);
    const VectorXc<Scalar> k2 = f((y + h * (Scalar(a21) * k1)).eval());
    const VectorXc<Scalar> k3 = f((y + h * (Scalar(a31) * k1 + Scalar(a32) * k2)).eval());
    const VectorXc<Scalar> k4 =
        f((y + h * (Scalar(a41) * k1 + Scalar(a42) * k2 + Scalar(a43) * k3)).eval());
    const VectorXc<Scalar> k5 = f((y + h * (Scalar(a51) * k1 + Scalar(a52) * k2 +
                                            Scalar(a53) * k3 + Scalar(a54) * k4))
                                      .eval());
    const VectorXc<Scalar> k6 =
        f((y + h * (Scalar(a61) * k1 + Scalar(a62) * k2 + Scalar(a63) * k3 + Scalar(a64) * k4 +
                    Scalar(a65) * k5))
              .eval());
    const VectorXc<Scalar> ynew =
        y + h * (Scalar(b1) * k1 + Scalar(b3) * k3 + Scalar(b4) * k4 + Scalar(b5) * k5 +
                 Scalar(b6) * k6);
    const VectorXc<Scalar> k7 = f(ynew);
    const VectorXc<Scalar> err = h * (Scalar(e1) * k1 + Scalar(e3) * k3 + Scalar(e4) * k4 +
                                      Scalar(e5) * k5 + Scalar(e6) * k6 + Scalar(e7) * k7);

    Scalar err_norm = Scalar(0);
    for (Index i = 0; i < y.size(); ++i) {
      const Scalar scale = tol + tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      err_norm = std::max(err_norm, std::abs(err(i)) / scale);
    }

    if (err_norm <= Scalar(1)) {
      t += h;
      y = ynew;
      if (t == t1 || direction * (t - t1) >= Scalar(0)) return y;
    }
    const Scalar factor =
        err_norm == Scalar(0)
            ? Scalar(5)
            : std::clamp(Scalar(0.9) * std::pow(err_norm, Scalar(-0.2)), Scalar(0.2), Scalar(5));
    h *= factor;
    if (std::abs(h) < Scalar(1e-14) * (Scalar(1) + std::abs(t))) {
      std::ostringstream msg;
      msg << "integrate_rk45: step size underflow at t=" << t << " (h=" << h
          << ", err=" << err_norm << ")";
      throw NumericError(msg.str());
    }
  }
  std::ostringstream msg;
  msg << "integrate_rk45: exceeded " << max_steps << " steps before reaching t=" << t1
      << " (stopped at t=" << t << ")";
  throw NumericError(msg.str());
}

}  // namespace momentlab

#endif
