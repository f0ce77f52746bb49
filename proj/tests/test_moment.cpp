#include "doctest.h"
#include "test_helpers.hpp"

using namespace momentlab;
using mltest::Complex;
using mltest::Mat;
using mltest::RMat;
using mltest::RVec;
using mltest::Vec;

namespace {

AlgebraElement<double> x3_of(const UnitaryRep<double>& rep) {
  return rep.element((RVec(3) << 0, 0, 1).finished());
}

}  // namespace

TEST_CASE("sigma values on the spin-1/2 highest-weight vector") {
  const auto rep = su2_spin<double>(0.5);
  const Vec e1 = rep.space().basis_vector(0);
  const auto x3 = x3_of(rep);

  CHECK(sigma(rep, x3, rep.space().zero()) == 0.0);

  // Oracle, inline: rho'(X3) e1 = -(i/2) e1, so
  // sigma = (1/2) Im< -(i/2) e1, e1 > = (1/2)(-1/2) = -1/4.
  CHECK((rho_prime(rep, x3) * e1 - Complex(0, -0.5) * e1).norm() < 1e-15);
  CHECK(sigma(rep, x3, e1) == doctest::Approx(-0.25).epsilon(1e-15));

  SplitMix64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element<double>(rng, rep.algebra());
    const Vec state = random_state<double>(rng, 2);
    const double lambda = rng.gaussian();
    // Quadratic homogeneity.
    CHECK(sigma(rep, x, (lambda * state).eval()) ==
          doctest::Approx(lambda * lambda * sigma(rep, x, state)).epsilon(1e-12));
  }
}

TEST_CASE("sigma is linear in the algebra argument") {
  const auto rep = su2_spin<double>(1);
  SplitMix64 rng(52);
  for (int trial = 0; trial < 15; ++trial) {
    const auto x = random_element<double>(rng, rep.algebra());
    const auto y = random_element<double>(rng, rep.algebra());
    const double a = rng.gaussian(), b = rng.gaussian();
    const Vec state = random_state<double>(rng, 3);
    const auto combo = rep.element((a * x.coords + b * y.coords).eval());
    CHECK(std::abs(sigma(rep, combo, state) -
                   (a * sigma(rep, x, state) + b * sigma(rep, y, state))) <
          1e-12 * (1.0 + state.squaredNorm()));
  }
}

TEST_CASE("gradient of sigma is the generator field") {
  const auto rep = su2_spin<double>(1);
  CheckConfig cfg;
  cfg.samples = 40;
  CHECK(check_grad_sigma(rep, cfg, /*finite_difference=*/false).defect <= 1e-10);
  CHECK(check_grad_sigma(rep, cfg, /*finite_difference=*/true).defect <= 1e-6);

  SplitMix64 rng(511);
  const auto x = random_element<double>(rng, rep.algebra());
  CHECK(grad_sigma_check(rep, x, 30, 5) <= 1e-10);
  CHECK(grad_sigma_check(rep, x, 30, 5, /*finite_difference=*/true) <= 1e-6);

  // X = 0: gradient and generator both vanish.
  const Vec state = rep.space().basis_vector(1);
  const auto zero = rep.element(RVec::Zero(3));
  CHECK(sigma_observable(rep, zero).gradient(state).norm() == 0.0);
  CHECK(grad_sigma_check(rep, zero, 10, 5) == 0.0);
}

TEST_CASE("sigma is a Lie algebra homomorphism into the Poisson algebra") {
  const auto su2 = su2_spin<double>(1);
  SplitMix64 rng(53);

  // su(2): {sigma(X1), sigma(X2)} = sigma(X3) pointwise.
  const auto x1 = su2.element((RVec(3) << 1, 0, 0).finished());
  const auto x2 = su2.element((RVec(3) << 0, 1, 0).finished());
  for (int trial = 0; trial < 15; ++trial) {
    const Vec state = random_state<double>(rng, 3);
    const double lhs = poisson(sigma_observable(su2, x1), sigma_observable(su2, x2), state);
    const double rhs = sigma(su2, bracket(x1, x2), state);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + state.squaredNorm()));
  }
  CHECK(sigma_homomorphism_defect(su2, x1, x2, 60, 7) <= 1e-9);

  // Defect is symmetric in X and Y (both sides flip sign together).
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element<double>(rng, su2.algebra());
    const auto y = random_element<double>(rng, su2.algebra());
    const Vec state = random_state<double>(rng, 3);
    const double dxy = poisson(sigma_observable(su2, x), sigma_observable(su2, y), state) -
                       sigma(su2, bracket(x, y), state);
    const double dyx = poisson(sigma_observable(su2, y), sigma_observable(su2, x), state) -
                       sigma(su2, bracket(y, x), state);
    CHECK(std::abs(std::abs(dxy) - std::abs(dyx)) < 1e-12);
  }

  // Abelian: both sides vanish identically.
  MatrixX<double> weights(2, 2);
  weights << 1, 0, 0, 2;
  const auto torus = torus_rep<double>(2, weights);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element<double>(rng, torus.algebra());
    const auto y = random_element<double>(rng, torus.algebra());
    const Vec state = random_state<double>(rng, 2);
    const double lhs = poisson(sigma_observable(torus, x), sigma_observable(torus, y), state);
    CHECK(std::abs(lhs) < 1e-12 * (1.0 + state.squaredNorm()));
    CHECK(sigma(torus, bracket(x, y), state) == 0.0);
  }
}

TEST_CASE("moment map values and homogeneity") {
  const auto rep = su2_spin<double>(0.5);
  CHECK(moment(rep, rep.space().zero()).coords.norm() == 0.0);

  // mu(e1) = (0, 0, -1/4): three sigma evaluations.
  const Vec e1 = rep.space().basis_vector(0);
  const auto mu = moment(rep, e1);
  CHECK((mu.coords - (RVec(3) << 0, 0, -0.25).finished()).norm() < 1e-15);

  SplitMix64 rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec state = random_state<double>(rng, 2);
    const double lambda = rng.gaussian();
    CHECK((moment(rep, (lambda * state).eval()).coords -
           lambda * lambda * moment(rep, state).coords)
              .norm() < 1e-12);
  }

  // mu(x)(X) = sigma(X)(x) through both code paths.
  CheckConfig cfg;
  cfg.samples = 40;
  CHECK(check_moment_sigma_agreement(rep, cfg).pass);
}

TEST_CASE("d_moment: closed form, finite differences, explicit matrix") {
  const auto rep = su2_spin<double>(0.5);
  CHECK(d_moment(rep, rep.space().zero()).norm() == 0.0);

  // Explicit 3x4 real matrix at the highest-weight vector. Rows are the
  // omega-coefficient vectors of G_i e1 in (Re,Im)-interleaved coordinates.
  const Vec e1 = rep.space().basis_vector(0);
  RMat expected(3, 4);
  expected << 0, 0, -0.5, 0,
              0, 0, 0, -0.5,
              -0.5, 0, 0, 0;
  CHECK((d_moment(rep, e1) - expected).norm() < 1e-15);
  CHECK(svd_rank(d_moment(rep, e1)) == 3);

  CheckConfig cfg;
  cfg.samples = 40;
  CHECK(check_dmoment_fd(rep, cfg).pass);
  CHECK(check_dmoment_fd(su2_spin<double>(1), cfg).pass);
}

TEST_CASE("isotropy algebras") {
  const auto half = su2_spin<double>(0.5);
  // x = 0: every generator kills 0.
  CHECK(isotropy_algebra(half, half.space().zero()).cols() == 3);
  // Trivial rep: everything acts as zero.
  const auto trivial = su2_spin<double>(0);
  CHECK(isotropy_algebra(trivial, trivial.space().basis_vector(0)).cols() == 3);

  // Spin 1/2 at e1: the vector stabilizer is trivial (rho'(X3) e1 = -(i/2)e1
  // is nonzero), so the nullspace of the explicit 4x3 action matrix is {0}.
  const Vec e1 = half.space().basis_vector(0);
  CHECK(action_matrix(half, e1).cols() == 3);
  CHECK(action_matrix(half, e1).rows() == 4);
  CHECK(svd_rank(action_matrix(half, e1)) == 3);
  CHECK(isotropy_algebra(half, e1).cols() == 0);

  // Spin 1 at |1,0>: J3 kills the middle weight vector, so the isotropy is
  // the X3 line and rank d mu drops to 2.
  const auto one = su2_spin<double>(1);
  const Vec m0 = one.space().basis_vector(1);
  const auto iso = isotropy_algebra(one, m0);
  REQUIRE(iso.cols() == 1);
  CHECK(std::abs(iso.col(0).cwiseAbs()(2) - 1.0) < 1e-12);
  CHECK(svd_rank(d_moment(one, m0)) == 2);
  CHECK(orbit_tangent(one, m0).cols() == 2);
  CHECK(orthonormal_nullspace(d_moment(one, m0)).cols() == 4);

  // Per-state reports agree with the explicit dimensions.
  const auto image_report = image_annihilator_report(one, m0);
  CHECK(image_report.pass);
  CHECK(image_report.witness["rank"] == 2);
  CHECK(image_report.witness["dim_isotropy"] == 1);
  const auto kernel_report = kernel_annihilator_report(one, m0);
  CHECK(kernel_report.pass);
  CHECK(kernel_report.witness["dim_kernel"] == 4);
  CHECK(kernel_report.witness["dim_orbit_tangent"] == 2);
}

TEST_CASE("image and kernel annihilator identities") {
  CheckConfig cfg;
  cfg.samples = 25;
  for (const char* name :
       {"su2:spin=0.5", "su2:spin=1", "sum(su2:spin=0.5,su2:spin=1)",
        "tensor(su2:spin=0.5,su2:spin=0.5)", "torus:dim=2,weights=[[1,0],[0,1],[1,-1]]"}) {
    const auto rep = parse_builtin_rep<double>(name);
    const auto image = check_image_annihilator(rep, cfg);
    const auto kernel = check_kernel_annihilator(rep, cfg);
    CAPTURE(name);
    CHECK(image.pass);
    CHECK(kernel.pass);
  }
}

TEST_CASE("moment map equivariance") {
  const auto rep = su2_spin<double>(0.5);
  SplitMix64 rng(55);
  const Vec state = random_state<double>(rng, 2);

  // g = 0 gives zero defect exactly.
  const auto zero = rep.element(RVec::Zero(3));
  CHECK(equivariance_defect(rep, zero, state) == 0.0);

  CheckConfig cfg;
  cfg.samples = 200;
  CHECK(check_equivariance(rep, cfg).pass);
  CHECK(check_equivariance(su2_spin<double>(1.5), cfg).pass);

  // Defect stays below tolerance when every sample is re-randomized by a
  // fixed unitary shift x -> rho(h) x.
  const auto h = random_element<double>(rng, rep.algebra());
  const Mat u = rho(rep, h);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SplitMix64 s = stream_for(99, static_cast<std::uint64_t>(trial));
    const auto g = random_element<double>(rng, rep.algebra());
    const Vec x = (u * random_state<double>(s, 2)).eval();
    worst = std::max(worst, equivariance_defect(rep, g, x) / (1.0 + x.squaredNorm()));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("pullback through mu is a Poisson morphism") {
  const auto rep = su2_spin<double>(1);
  SplitMix64 rng(56);

  // Constant functions: both sides vanish.
  const Vec state = random_state<double>(rng, 3);
  CHECK(poisson_morphism_defect(rep, DualObservable<double>::constant(2.0),
                                DualObservable<double>::linear(random_element<double>(rng, rep.algebra())),
                                state) == 0.0);

  // Linear functions: both sides equal sigma([X,Y])(x).
  for (int trial = 0; trial < 15; ++trial) {
    const auto x = random_element<double>(rng, rep.algebra());
    const auto y = random_element<double>(rng, rep.algebra());
    const Vec s = random_state<double>(rng, 3);
    const auto mu = moment(rep, s);
    const double dual_side =
        lie_poisson_bracket(DualObservable<double>::linear(x), DualObservable<double>::linear(y),
                            mu);
    const double via_sigma = sigma(rep, bracket(x, y), s);
    CHECK(std::abs(dual_side - via_sigma) <= 1e-9 * (1.0 + s.squaredNorm()));
    CHECK(poisson_morphism_defect(rep, DualObservable<double>::linear(x),
                                  DualObservable<double>::linear(y), s) <=
          1e-9 * (1.0 + s.squaredNorm()));
  }

  CheckConfig cfg;
  cfg.samples = 40;
  CHECK(check_poisson_morphism_linear(rep, cfg).pass);
  CHECK(check_poisson_morphism_quadratic(rep, cfg).pass);
}

TEST_CASE("Hamiltonian flow of sigma(X)") {
  const auto rep = su2_spin<double>(1);
  SplitMix64 rng(57);
  const auto x = random_element<double>(rng, rep.algebra());
  const Vec x0 = random_unit_state<double>(rng, 3);

  CHECK((hamiltonian_flow(rep, x, x0, 0.0) - x0).norm() == 0.0);

  for (const double t : {0.1, 1.0}) {
    const Vec flowed = hamiltonian_flow(rep, x, x0, t);
    const Vec exact = rho(rep, rep.element((t * x.coords).eval())) * x0;
    CHECK((flowed - exact).norm() <= 1e-8);
    CHECK(std::abs(flowed.norm() - x0.norm()) <= 1e-8);          // unitary flow
    CHECK(std::abs(sigma(rep, x, flowed) - sigma(rep, x, x0)) <= 1e-8);  // energy
  }

  CheckConfig cfg;
  cfg.samples = 10;
  CHECK(check_flow(rep, cfg).pass);

  // Integrator failure surfaces as NumericError with diagnostics.
  const Mat gen = rho_prime(rep, x);
  CHECK_THROWS_AS(integrate_rk45<double>([&gen](const Vec& y) { return (gen * y).eval(); },
                                         x0, 0.0, 1.0, 1e-10, /*max_steps=*/2),
                  NumericError);
}

TEST_CASE("sphere image sampling") {
  // Trivial rep: every sample is the zero dual vector.
  const auto trivial = su2_spin<double>(0);
  CHECK(sphere_image_sample(trivial, 50, 7).norm() == 0.0);

  // Spin 1/2: |mu(x)| = 1/4 exactly on the unit sphere (Bloch vector).
  const auto half = su2_spin<double>(0.5);
  const auto samples = sphere_image_sample(half, 500, 7);
  for (Index k = 0; k < samples.rows(); ++k) {
    CHECK(samples.row(k).norm() <= 0.25 + 1e-12);
    CHECK(samples.row(k).norm() == doctest::Approx(0.25).epsilon(1e-12));
  }

  // Deterministic per seed and independent of the worker-thread count.
  const auto again = sphere_image_sample(half, 500, 7);
  CHECK((samples - again).norm() == 0.0);
  const auto threaded = sphere_image_sample(half, 500, 7, /*threads=*/4);
  CHECK((samples - threaded).norm() == 0.0);
  const auto other_seed = sphere_image_sample(half, 500, 8);
  CHECK((samples - other_seed).norm() != 0.0);
}

TEST_CASE("support function suprema") {
  const auto half = su2_spin<double>(0.5);
  const auto one = su2_spin<double>(1);
  SplitMix64 rng(58);
  for (int trial = 0; trial < 10; ++trial) {
    RVec dir = random_real_vector<double>(rng, 3);
    dir /= dir.norm();
    // For unit directions the Hermitian generator has eigenvalues {+-1/2}
    // (spin 1/2) and {-1,0,1} (spin 1).
    CHECK(support_supremum(half, half.element(dir)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(support_supremum(one, one.element(dir)) == doctest::Approx(0.5).epsilon(1e-12));
  }

  auto [bound, reach] = check_sphere_support(half, 20000, 10, 99, 2);
  CHECK(bound.pass);  // no sample may exceed the exact support value
  CHECK(reach.defect < 5e-3);
}

TEST_CASE("sigma equivariance under the group action") {
  CheckConfig cfg;
  cfg.samples = 60;
  CHECK(check_sigma_equivariance(su2_spin<double>(0.5), cfg).pass);
  CHECK(check_sigma_equivariance(su2_spin<double>(2), cfg).pass);
}

TEST_CASE("full check battery stays green on shipped reps") {
  CheckConfig cfg;
  cfg.samples = 15;
  for (const char* name : {"su2:spin=0.5", "torus:dim=1,weights=[[1],[-1]]"}) {
    const auto rep = parse_builtin_rep<double>(name);
    for (const auto& report : run_all_checks(rep, cfg)) {
      CAPTURE(name);
      CAPTURE(report.check);
      CHECK(report.pass);
    }
  }
}
