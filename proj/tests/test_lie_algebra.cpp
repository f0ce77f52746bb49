#include "doctest.h"
#include "test_helpers.hpp"

using namespace momentlab;
using mltest::Complex;
using mltest::Mat;
using mltest::RVec;

namespace {

AlgebraElement<double> elem(const LieAlgebra<double>& alg, std::initializer_list<double> c) {
  RVec v(static_cast<Index>(c.size()));
  Index i = 0;
  for (const double x : c) v(i++) = x;
  return AlgebraElement<double>(alg, v);
}

}  // namespace

TEST_CASE("su2 bracket matches the defining-representation commutator") {
  const auto alg = LieAlgebra<double>::su2();
  const auto basis = mltest::su2_defining_basis();
  SplitMix64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const RVec xc = random_real_vector<double>(rng, 3);
    const RVec yc = random_real_vector<double>(rng, 3);
    Mat mx = Mat::Zero(2, 2), my = Mat::Zero(2, 2);
    for (Index k = 0; k < 3; ++k) {
      mx += xc(k) * basis[static_cast<std::size_t>(k)];
      my += yc(k) * basis[static_cast<std::size_t>(k)];
    }
    const RVec oracle = mltest::expand_in_su2_basis((mx * my - my * mx).eval());
    const auto br = bracket(AlgebraElement<double>(alg, xc), AlgebraElement<double>(alg, yc));
    CHECK((br.coords - oracle).norm() < 1e-12);
  }
  // c(0,1,2) = 1 cyclically: [X1,X2] = X3
  const auto x3 = bracket(elem(alg, {1, 0, 0}), elem(alg, {0, 1, 0}));
  CHECK((x3.coords - (RVec(3) << 0, 0, 1).finished()).norm() == 0.0);
}

TEST_CASE("bracket is alternating and vanishes on abelian algebras") {
  const auto su2 = LieAlgebra<double>::su2();
  const auto flat = LieAlgebra<double>::abelian(4);
  SplitMix64 rng(12);
  const auto x = AlgebraElement<double>(su2, random_real_vector<double>(rng, 3));
  CHECK(bracket(x, x).coords.norm() == 0.0);
  const auto a = AlgebraElement<double>(flat, random_real_vector<double>(rng, 4));
  const auto b = AlgebraElement<double>(flat, random_real_vector<double>(rng, 4));
  CHECK(bracket(a, b).coords.norm() == 0.0);
}

TEST_CASE("operations reject mismatched algebras") {
  const auto su2 = LieAlgebra<double>::su2();
  const auto flat = LieAlgebra<double>::abelian(3);
  const auto x = elem(su2, {1, 0, 0});
  const auto y = elem(flat, {1, 0, 0});
  CHECK_THROWS_AS(bracket(x, y), std::invalid_argument);
  CHECK_THROWS_AS(coadjoint(x, DualVector<double>(flat, y.coords)), std::invalid_argument);
  CHECK_THROWS_AS(pairing(DualVector<double>(flat, y.coords), x), std::invalid_argument);
}

TEST_CASE("construction validates antisymmetry and the Jacobi identity") {
  auto set = [](std::vector<double>& c, Index i, Index j, Index k, double v) {
    c[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = v;
  };
  {
    std::vector<double> c(27, 0.0);
    set(c, 0, 1, 2, 1.0);  // missing the antisymmetric partner
    CHECK_THROWS_AS(LieAlgebra<double>({"a", "b", "c"}, c), std::invalid_argument);
  }
  {
    // [X0,X1] = X2 and [X0,X2] = X0, antisymmetric but not Jacobi:
    // [[X0,X1],X2] + [[X1,X2],X0] + [[X2,X0],X1] = -X2.
    std::vector<double> c(27, 0.0);
    set(c, 0, 1, 2, 1.0);
    set(c, 1, 0, 2, -1.0);
    set(c, 0, 2, 0, 1.0);
    set(c, 2, 0, 0, -1.0);
    CHECK_THROWS_AS(LieAlgebra<double>({"a", "b", "c"}, c), std::invalid_argument);
  }
  CHECK_NOTHROW(LieAlgebra<double>::su2());
  CHECK_THROWS_AS(LieAlgebra<double>({}, {}), std::invalid_argument);
}

TEST_CASE("ad matrices") {
  const auto alg = LieAlgebra<double>::su2();
  CHECK(ad(elem(alg, {0, 0, 0})).norm() == 0.0);

  // Explicit matrix from the structure constants.
  const auto ad3 = ad(elem(alg, {0, 0, 1}));
  mltest::RMat expected(3, 3);
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  CHECK((ad3 - expected).norm() == 0.0);

  // Characteristic polynomial lambda (lambda^2 + 1): ad^3 + ad = 0 with
  // eigenvalues {0, +i, -i}.
  CHECK((ad3 * ad3 * ad3 + ad3).norm() < 1e-14);
  Eigen::EigenSolver<mltest::RMat> es(ad3);
  std::vector<double> imags;
  for (Index k = 0; k < 3; ++k) {
    CHECK(std::abs(es.eigenvalues()(k).real()) < 1e-12);
    imags.push_back(es.eigenvalues()(k).imag());
  }
  std::sort(imags.begin(), imags.end());
  CHECK(std::abs(imags[0] + 1) < 1e-12);
  CHECK(std::abs(imags[1]) < 1e-12);
  CHECK(std::abs(imags[2] - 1) < 1e-12);

  SplitMix64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
    CHECK(std::abs(ad(x).trace()) < 1e-14);  // su(2) is unimodular
  }
}

TEST_CASE("Ad is exp(ad) and acts by automorphisms") {
  const auto alg = LieAlgebra<double>::su2();
  CHECK((Ad(elem(alg, {0, 0, 0})) - mltest::RMat::Identity(3, 3)).norm() == 0.0);

  // Quarter turn about X3 sends X1 to X2.
  const auto rot = Ad(elem(alg, {0, 0, M_PI / 2}));
  CHECK((rot.col(0) - (RVec(3) << 0, 1, 0).finished()).norm() < 1e-12);

  SplitMix64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
    const auto x = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
    const auto y = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
    const auto m = Ad(g);
    const RVec lhs = m * bracket(x, y).coords;
    const RVec rhs = alg.bracket_coords((m * x.coords).eval(), (m * y.coords).eval());
    CHECK((lhs - rhs).norm() < 1e-10);
  }
}

TEST_CASE("coadjoint action") {
  const auto alg = LieAlgebra<double>::su2();
  SplitMix64 rng(15);
  const DualVector<double> alpha(alg, random_real_vector<double>(rng, 3));

  CHECK((coadjoint(elem(alg, {0, 0, 0}), alpha).coords - alpha.coords).norm() == 0.0);

  for (int trial = 0; trial < 25; ++trial) {
    const auto g = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
    const auto x = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
    const DualVector<double> a(alg, random_real_vector<double>(rng, 3));
    // <Ad'(g) a, Ad(g) x> = <a, x>
    const AlgebraElement<double> moved(alg, (Ad(g) * x.coords).eval());
    CHECK(pairing(coadjoint(g, a), moved) == doctest::Approx(pairing(a, x)).epsilon(1e-10));
    // su(2) coadjoint orbits are spheres
    CHECK(coadjoint(g, a).coords.norm() == doctest::Approx(a.coords.norm()).epsilon(1e-12));
  }

  // Left action on commuting parameters: exp(a) exp(b) = exp(a+b).
  for (int trial = 0; trial < 10; ++trial) {
    const RVec dir = random_real_vector<double>(rng, 3);
    const double s = rng.gaussian(), t = rng.gaussian();
    const AlgebraElement<double> a(alg, (s * dir).eval());
    const AlgebraElement<double> b(alg, (t * dir).eval());
    const AlgebraElement<double> ab(alg, ((s + t) * dir).eval());
    const auto once = coadjoint(ab, alpha);
    const auto twice = coadjoint(a, coadjoint(b, alpha));
    CHECK((once.coords - twice.coords).norm() < 1e-10);
  }
}

TEST_CASE("Lie-Poisson bracket on the dual") {
  const auto alg = LieAlgebra<double>::su2();
  SplitMix64 rng(16);

  const auto f_const = DualObservable<double>::constant(3.25);
  const auto x = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
  const auto y = AlgebraElement<double>(alg, random_real_vector<double>(rng, 3));
  const auto fx = DualObservable<double>::linear(x);
  const auto fy = DualObservable<double>::linear(y);

  for (int trial = 0; trial < 25; ++trial) {
    const DualVector<double> alpha(alg, random_real_vector<double>(rng, 3));
    CHECK(lie_poisson_bracket(f_const, fx, alpha) == 0.0);

    // Linear functions reproduce the bracket: {f_X, f_Y} = f_[X,Y].
    const double expected = pairing(alpha, bracket(x, y));
    CHECK(lie_poisson_bracket(fx, fy, alpha) == doctest::Approx(expected).epsilon(1e-12));

    // Finite-difference gradient path agrees.
    const auto fx_fd = DualObservable<double>(
        [&x](const RVec& a) { return a.dot(x.coords); });
    const auto fy_fd = DualObservable<double>(
        [&y](const RVec& a) { return a.dot(y.coords); });
    CHECK(lie_poisson_bracket(fx_fd, fy_fd, alpha) ==
          doctest::Approx(expected).epsilon(1e-8));

    // Antisymmetry for quadratic observables.
    mltest::RMat q1(3, 3), q2(3, 3);
    for (Index r = 0; r < 3; ++r)
      for (Index c = 0; c < 3; ++c) {
        q1(r, c) = rng.gaussian();
        q2(r, c) = rng.gaussian();
      }
    const auto g1 = DualObservable<double>::quadratic(q1, random_real_vector<double>(rng, 3));
    const auto g2 = DualObservable<double>::quadratic(q2, random_real_vector<double>(rng, 3));
    CHECK(std::abs(lie_poisson_bracket(g1, g2, alpha) + lie_poisson_bracket(g2, g1, alpha)) <
          1e-10);
  }
}

TEST_CASE("Lie algebra JSON round trip and validation") {
  const auto alg = LieAlgebra<double>::su2();
  const json j = to_json(alg);
  const auto back = lie_algebra_from_json<double>(j);
  CHECK(back.same_structure(alg));
  CHECK(back.labels() == alg.labels());

  json corrupt = j;
  corrupt["c"][0][1][2] = 1.0;
  corrupt["c"][1][0][2] = 1.0;  // breaks antisymmetry
  CHECK_THROWS_AS(lie_algebra_from_json<double>(corrupt), std::invalid_argument);

  json truncated = j;
  truncated.erase("c");
  CHECK_THROWS_AS(lie_algebra_from_json<double>(truncated), std::invalid_argument);
}
