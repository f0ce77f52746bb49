#include "doctest.h"
#include "test_helpers.hpp"

using namespace momentlab;
using mltest::Complex;
using mltest::Mat;
using mltest::Vec;

TEST_CASE("quadratic observables carry the exact linear gradient field") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Mat a = mltest::random_skew_hermitian(rng, 4);
    const auto f = Observable<double>::quadratic(a);
    const Vec x = random_state<double>(rng, 4);
    CHECK((f.gradient(x) - a * x).norm() == 0.0);
    CHECK(f.value(x) == doctest::Approx(omega((a * x).eval(), x) / 2).epsilon(1e-15));

    // Defining relation df(x)y = omega(grad f(x), y) against central differences.
    for (int probe = 0; probe < 4; ++probe) {
      const Vec y = random_unit_state<double>(rng, 4);
      const double h = 1e-5 * (1.0 + x.norm());
      const double fd =
          mltest::fd_directional([&f](const Vec& v) { return f.value(v); }, x, y, h);
      const double exact = omega(f.gradient(x), y);
      CHECK(std::abs(fd - exact) / (1.0 + std::abs(exact)) < 1e-6);
    }
  }
}

TEST_CASE("constant observables have zero gradient") {
  const auto f = Observable<double>::constant(2.5);
  const Vec x = Vec::Ones(3);
  CHECK(f.value(x) == 2.5);
  CHECK(f.gradient(x).norm() == 0.0);
}

TEST_CASE("finite-difference fallback matches the exact gradient") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = mltest::random_skew_hermitian(rng, 3);
    const auto exact = Observable<double>::quadratic(a);
    const auto fd = Observable<double>::general(
        [&exact](const Vec& v) { return exact.value(v); });
    const Vec x = random_state<double>(rng, 3);
    const double rel = (fd.gradient(x) - exact.gradient(x)).norm() / (1.0 + x.norm());
    CHECK(rel < 1e-6);
  }
}

TEST_CASE("quadratic construction rejects operators without the omega symmetry") {
  CHECK_THROWS_AS(Observable<double>::quadratic(Mat::Identity(3, 3)), std::invalid_argument);
  CHECK_NOTHROW(Observable<double>::quadratic((Complex(0, 1) * Mat::Identity(3, 3)).eval()));
}

TEST_CASE("Poisson bracket: alternating, antisymmetric, Jacobi") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = Observable<double>::quadratic(mltest::random_skew_hermitian(rng, 3));
    const auto g = Observable<double>::quadratic(mltest::random_skew_hermitian(rng, 3));
    const auto h = Observable<double>::quadratic(mltest::random_skew_hermitian(rng, 3));
    const Vec x = random_state<double>(rng, 3);

    CHECK(poisson(f, f, x) == 0.0);
    CHECK(std::abs(poisson(f, g, x) + poisson(g, f, x)) < 1e-10);

    // Jacobi, inner brackets exact through the quadratic closure.
    const double cyc = poisson(f, poisson_quadratic(g, h), x) +
                       poisson(g, poisson_quadratic(h, f), x) +
                       poisson(h, poisson_quadratic(f, g), x);
    CHECK(std::abs(cyc) < 1e-8 * (1.0 + std::pow(x.norm(), 4)));
  }
}

TEST_CASE("bracket of quadratics is quadratic with the commutator operator") {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = mltest::random_skew_hermitian(rng, 4);
    const Mat b = mltest::random_skew_hermitian(rng, 4);
    const auto f = Observable<double>::quadratic(a);
    const auto g = Observable<double>::quadratic(b);
    const auto fg = poisson_quadratic(f, g);
    CHECK((fg.op() - (a * b - b * a)).norm() < 1e-14);
    for (int probe = 0; probe < 5; ++probe) {
      const Vec x = random_state<double>(rng, 4);
      CHECK(std::abs(poisson(f, g, x) - fg.value(x)) < 1e-10 * (1.0 + x.squaredNorm()));
    }
  }
  const auto general = Observable<double>::constant(1.0);
  const auto quad = Observable<double>::quadratic(mltest::random_skew_hermitian(rng, 2));
  CHECK_THROWS_AS(poisson_quadratic(general, quad), std::invalid_argument);
}
