#ifndef MOMENTLAB_CHECKS_HPP
#define MOMENTLAB_CHECKS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "momentlab/lie_poisson.hpp"
#include "momentlab/moment.hpp"
#include "momentlab/serialize.hpp"

namespace momentlab {

/// One verification outcome. `defect` is the worst (scaled) deviation seen,
/// `witness` the inputs that produced it.
struct CheckReport {
  std::string check;
  double defect = 0;
  double tolerance = 0;
  bool pass = false;
  json witness = json::object();

  json to_json() const {
    return json{{"check", check}, {"defect", defect}, {"tolerance", tolerance},
                {"pass", pass},   {"witness", witness}};
  }
};

struct CheckConfig {
  std::uint64_t seed = 12345;
  Index samples = 100;
  int threads = 1;
  std::map<std::string, double> tolerances;  // per-check overrides

  double tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
};

namespace detail {

inline CheckReport finish(std::string name, double defect, double tol, json witness) {
  CheckReport r;
  r.check = std::move(name);
  r.defect = defect;
  r.tolerance = tol;
  r.pass = defect <= tol;
  r.witness = std::move(witness);
  return r;
}

/// State with Gaussian components; norm varies so scaled tolerances are exercised.
template <typename Scalar>
VectorXc<Scalar> sample_state(SplitMix64& rng, Index n) {
  return random_state<Scalar>(rng, n);
}

}  // namespace detail

/// grad sigma(X) = rho'(X): max over samples of
/// |grad sigma(X)(x) - rho'(X) x| / (1 + |x|), with the gradient taken either
/// through the exact quadratic field or through central differences.
template <typename Scalar>
CheckReport check_grad_sigma(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg,
                             bool finite_difference) {
  const std::string name = finite_difference ? "grad_sigma_fd" : "grad_sigma_exact";
  const double tol = cfg.tol(name, finite_difference ? 1e-6 : 1e-10);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x10000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const double d =
        static_cast<double>(grad_sigma_point_defect(rep, x, state, finite_difference));
    if (d >= worst) {
      worst = d;
      witness = json{{"X", real_vector_to_json<Scalar>(x.coords)}, {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish(name, worst, tol, std::move(witness));
}

/// sigma is linear in X: sigma(aX + bY) = a sigma(X) + b sigma(Y) pointwise.
template <typename Scalar>
CheckReport check_sigma_linearity(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("sigma_linearity", 1e-12);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x20000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const AlgebraElement<Scalar> y = random_element<Scalar>(rng, rep.algebra());
    const Scalar a = static_cast<Scalar>(rng.gaussian());
    const Scalar b = static_cast<Scalar>(rng.gaussian());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const AlgebraElement<Scalar> combo(rep.algebra(), (a * x.coords + b * y.coords).eval());
    const Scalar lhs = sigma(rep, combo, state);
    const Scalar rhs = a * sigma(rep, x, state) + b * sigma(rep, y, state);
    const double d =
        static_cast<double>(std::abs(lhs - rhs) / (Scalar(1) + state.squaredNorm()));
    if (d >= worst) {
      worst = d;
      witness = json{{"X", real_vector_to_json<Scalar>(x.coords)},
                     {"Y", real_vector_to_json<Scalar>(y.coords)},
                     {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("sigma_linearity", worst, tol, std::move(witness));
}

/// sigma is a Lie algebra homomorphism:
/// |{sigma(X), sigma(Y)}(x) - sigma([X,Y])(x)| <= tol (1 + |x|^2).
template <typename Scalar>
CheckReport check_sigma_homomorphism(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("sigma_homomorphism", 1e-9);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x30000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const AlgebraElement<Scalar> y = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const double d = static_cast<double>(sigma_homomorphism_point_defect(rep, x, y, state));
    if (d >= worst) {
      worst = d;
      witness = json{{"X", real_vector_to_json<Scalar>(x.coords)},
                     {"Y", real_vector_to_json<Scalar>(y.coords)},
                     {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("sigma_homomorphism", worst, tol, std::move(witness));
}

/// sigma(X)(rho(g)x) = sigma(Ad(exp(-g))X)(x), the two sides going through
/// the complex and the real exponential respectively.
template <typename Scalar>
CheckReport check_sigma_equivariance(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("sigma_equivariance", 1e-9);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x40000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> g = random_element<Scalar>(rng, rep.algebra());
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const Scalar lhs = sigma(rep, x, (rho(rep, g) * state).eval());
    const AlgebraElement<Scalar> gneg(rep.algebra(), (-g.coords).eval());
    const AlgebraElement<Scalar> adjusted(rep.algebra(), (Ad(gneg) * x.coords).eval());
    const Scalar rhs = sigma(rep, adjusted, state);
    const double d =
        static_cast<double>(std::abs(lhs - rhs) / (Scalar(1) + state.squaredNorm()));
    if (d >= worst) {
      worst = d;
      witness = json{{"g", real_vector_to_json<Scalar>(g.coords)},
                     {"X", real_vector_to_json<Scalar>(x.coords)},
                     {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("sigma_equivariance", worst, tol, std::move(witness));
}

/// mu(x)(X) = sigma(X)(x) through the two code paths.
template <typename Scalar>
CheckReport check_moment_sigma_agreement(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("moment_sigma_agreement", 1e-12);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x50000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const DualVector<Scalar> mu = moment(rep, state);
    const Scalar lhs = pairing(mu, x);
    const Scalar rhs = sigma_observable(rep, x).value(state);
    const double d =
        static_cast<double>(std::abs(lhs - rhs) / (Scalar(1) + state.squaredNorm()));
    if (d >= worst) {
      worst = d;
      witness = json{{"X", real_vector_to_json<Scalar>(x.coords)}, {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("moment_sigma_agreement", worst, tol, std::move(witness));
}

/// Closed-form d mu against central finite differences of mu.
template <typename Scalar>
CheckReport check_dmoment_fd(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("dmoment_fd", 1e-6);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x60000u + static_cast<std::uint64_t>(trial));
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const VectorXc<Scalar> dir = random_unit_state<Scalar>(rng, rep.dim());
    const Scalar h = Scalar(1e-5) * (Scalar(1) + state.norm());
    const VectorX<Scalar> fd =
        (moment(rep, (state + h * dir).eval()).coords - moment(rep, (state - h * dir).eval()).coords) /
        (Scalar(2) * h);
    const VectorX<Scalar> closed = d_moment(rep, state) * to_real<Scalar>(dir);
    const double d = static_cast<double>((fd - closed).norm() /
                                         std::max(closed.norm(), Scalar(1e-9)));
    if (d >= worst) {
      worst = d;
      witness = json{{"x", to_json<Scalar>(state)}, {"y", to_json<Scalar>(dir)}};
    }
  }
  return detail::finish("dmoment_fd", worst, tol, std::move(witness));
}

namespace detail {

template <typename Scalar>
std::vector<VectorXc<Scalar>> annihilator_sample_points(const UnitaryRep<Scalar>& rep,
                                                        const CheckConfig& cfg,
                                                        std::uint64_t salt) {
  std::vector<VectorXc<Scalar>> points;
  points.push_back(VectorXc<Scalar>::Zero(rep.dim()));  // degenerate point
  points.push_back(VectorXc<Scalar>::Unit(rep.dim(), 0));  // highest-weight vector of spin reps
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, salt + static_cast<std::uint64_t>(trial));
    points.push_back(sample_state<Scalar>(rng, rep.dim()));
  }
  return points;
}

}  // namespace detail

/// Image of d mu(x) is the annihilator of the isotropy algebra at one state:
/// rank d mu(x) = dim g - dim g_x, and every (unit) image vector pairs to
/// ~0 with every (unit) isotropy basis vector. A rank mismatch reports
/// defect 1.
template <typename Scalar>
CheckReport image_annihilator_report(const UnitaryRep<Scalar>& rep,
                                     const VectorXc<Scalar>& state, double tol = 1e-9) {
  const MatrixX<Scalar> dmu = d_moment(rep, state);
  const MatrixX<Scalar> image = orthonormal_range(dmu);
  const MatrixX<Scalar> iso = isotropy_algebra(rep, state);
  const Index rank = image.cols();
  const Index expected = rep.algebra().dim() - iso.cols();
  double d = rank == expected ? 0.0 : 1.0;
  if (image.cols() > 0 && iso.cols() > 0)
    d = std::max(d, static_cast<double>((image.transpose() * iso).cwiseAbs().maxCoeff()));
  return detail::finish("image_annihilator", d, tol,
                        json{{"x", to_json<Scalar>(state)},
                             {"rank", rank},
                             {"dim_isotropy", iso.cols()},
                             {"dim_algebra", rep.algebra().dim()}});
}

template <typename Scalar>
CheckReport check_image_annihilator(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("image_annihilator", 1e-9);
  CheckReport worst;
  for (const auto& state : detail::annihilator_sample_points(rep, cfg, 0x70000u)) {
    CheckReport r = image_annihilator_report(rep, state, tol);
    if (worst.check.empty() || r.defect >= worst.defect) worst = std::move(r);
  }
  return worst;
}

/// Kernel of d mu(x) is the omega-annihilator of the orbit tangent space at
/// one state: dim ker = 2n - dim T_x and omega(k, t) ~ 0 on basis pairs.
template <typename Scalar>
CheckReport kernel_annihilator_report(const UnitaryRep<Scalar>& rep,
                                      const VectorXc<Scalar>& state, double tol = 1e-9) {
  const MatrixX<Scalar> dmu = d_moment(rep, state);
  const MatrixX<Scalar> kernel = orthonormal_nullspace(dmu);
  const MatrixX<Scalar> tangent = orbit_tangent(rep, state);
  double d = kernel.cols() == 2 * rep.dim() - tangent.cols() ? 0.0 : 1.0;
  if (kernel.cols() > 0 && tangent.cols() > 0) {
    const MatrixX<Scalar> pairings =
        kernel.transpose() * omega_matrix<Scalar>(rep.dim()) * tangent;
    d = std::max(d, static_cast<double>(pairings.cwiseAbs().maxCoeff()));
  }
  return detail::finish("kernel_annihilator", d, tol,
                        json{{"x", to_json<Scalar>(state)},
                             {"dim_kernel", kernel.cols()},
                             {"dim_orbit_tangent", tangent.cols()},
                             {"real_dim", 2 * rep.dim()}});
}

template <typename Scalar>
CheckReport check_kernel_annihilator(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("kernel_annihilator", 1e-9);
  CheckReport worst;
  for (const auto& state : detail::annihilator_sample_points(rep, cfg, 0x80000u)) {
    CheckReport r = kernel_annihilator_report(rep, state, tol);
    if (worst.check.empty() || r.defect >= worst.defect) worst = std::move(r);
  }
  return worst;
}

/// Equivariance of mu: |coadjoint(g, mu(x)) - mu(rho(g) x)|_inf
/// <= tol (1 + |x|^2), the sides going through exp(ad) and exp(rho').
template <typename Scalar>
CheckReport check_equivariance(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("equivariance", 1e-9);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0x90000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> g = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const double d =
        static_cast<double>(equivariance_defect(rep, g, state) / (Scalar(1) + state.squaredNorm()));
    if (d >= worst) {
      worst = d;
      witness = json{{"g", real_vector_to_json<Scalar>(g.coords)}, {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("equivariance", worst, tol, std::move(witness));
}

/// Pullback through mu is a Poisson morphism:
/// {f1 o mu, f2 o mu}(x) = {f1, f2}_{g*}(mu(x)), with
/// grad(f o mu)(x) = rho'(df(mu(x))) x on the left-hand side.
template <typename Scalar>
Scalar poisson_morphism_defect(const UnitaryRep<Scalar>& rep, const DualObservable<Scalar>& f1,
                               const DualObservable<Scalar>& f2, const VectorXc<Scalar>& state) {
  const DualVector<Scalar> mu = moment(rep, state);
  const AlgebraElement<Scalar> d1(rep.algebra(), f1.gradient(mu.coords));
  const AlgebraElement<Scalar> d2(rep.algebra(), f2.gradient(mu.coords));
  const VectorXc<Scalar> g1 = rho_prime(rep, d1) * state;
  const VectorXc<Scalar> g2 = rho_prime(rep, d2) * state;
  const Scalar hilbert_side = omega(g1, g2);
  const Scalar dual_side = lie_poisson_bracket(f1, f2, mu);
  return std::abs(hilbert_side - dual_side);
}

template <typename Scalar>
CheckReport check_poisson_morphism_linear(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  const double tol = cfg.tol("poisson_morphism_linear", 1e-9);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0xA0000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const AlgebraElement<Scalar> y = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const Scalar defect = poisson_morphism_defect(rep, DualObservable<Scalar>::linear(x),
                                                  DualObservable<Scalar>::linear(y), state);
    const double d = static_cast<double>(defect / (Scalar(1) + state.squaredNorm()));
    if (d >= worst) {
      worst = d;
      witness = json{{"X", real_vector_to_json<Scalar>(x.coords)},
                     {"Y", real_vector_to_json<Scalar>(y.coords)},
                     {"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("poisson_morphism_linear", worst, tol, std::move(witness));
}

/// Same identity for random quadratic functions on g* whose gradients are
/// assembled by finite differences.
template <typename Scalar>
CheckReport check_poisson_morphism_quadratic(const UnitaryRep<Scalar>& rep,
                                             const CheckConfig& cfg) {
  const double tol = cfg.tol("poisson_morphism_quadratic", 1e-6);
  const Index n = rep.algebra().dim();
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0xB0000u + static_cast<std::uint64_t>(trial));
    MatrixX<Scalar> q1(n, n), q2(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) {
        q1(r, c) = static_cast<Scalar>(rng.gaussian());
        q2(r, c) = static_cast<Scalar>(rng.gaussian());
      }
    const VectorX<Scalar> b1 = random_real_vector<Scalar>(rng, n);
    const VectorX<Scalar> b2 = random_real_vector<Scalar>(rng, n);
    const VectorXc<Scalar> state = detail::sample_state<Scalar>(rng, rep.dim());
    const auto f1 = DualObservable<Scalar>::quadratic(q1, b1, /*exact_gradient=*/false);
    const auto f2 = DualObservable<Scalar>::quadratic(q2, b2, /*exact_gradient=*/false);
    const Scalar defect = poisson_morphism_defect(rep, f1, f2, state);
    const Scalar scale = Scalar(1) + state.squaredNorm();
    const double d = static_cast<double>(defect / (scale * scale));
    if (d >= worst) {
      worst = d;
      witness = json{{"x", to_json<Scalar>(state)}};
    }
  }
  return detail::finish("poisson_morphism_quadratic", worst, tol, std::move(witness));
}

/// Integrated Hamiltonian flow of sigma(X) against rho(exp(tX)) x0, plus
/// conservation of mu(.)(X) along the flow.
template <typename Scalar>
CheckReport check_flow(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg,
                       std::vector<Scalar> times = {Scalar(0.1), Scalar(1)}) {
  const double tol = cfg.tol("flow", 1e-8);
  double worst = 0;
  json witness = json::object();
  for (Index trial = 0; trial < cfg.samples; ++trial) {
    SplitMix64 rng = stream_for(cfg.seed, 0xC0000u + static_cast<std::uint64_t>(trial));
    const AlgebraElement<Scalar> x = random_element<Scalar>(rng, rep.algebra());
    const VectorXc<Scalar> state0 =
        (random_unit_state<Scalar>(rng, rep.dim()) * static_cast<Scalar>(0.5 + rng.uniform())).eval();
    for (const Scalar t : times) {
      const VectorXc<Scalar> flowed = hamiltonian_flow(rep, x, state0, t);
      const AlgebraElement<Scalar> tx(rep.algebra(), (t * x.coords).eval());
      const VectorXc<Scalar> exact = rho(rep, tx) * state0;
      double d = static_cast<double>((flowed - exact).norm());
      d = std::max(d, static_cast<double>(std::abs(flowed.norm() - state0.norm())));
      d = std::max(d, static_cast<double>(std::abs(sigma(rep, x, flowed) - sigma(rep, x, state0))));
      if (d >= worst) {
        worst = d;
        witness = json{{"X", real_vector_to_json<Scalar>(x.coords)},
                       {"x0", to_json<Scalar>(state0)},
                       {"t", static_cast<double>(t)}};
      }
    }
  }
  return detail::finish("flow", worst, tol, std::move(witness));
}

/// Sphere-image experiment: (a) no sampled mu exceeds the exact support value
/// in any sampled direction, (b) the empirical maximum reaches the support
/// value up to reach_tol. Returns the two reports.
template <typename Scalar>
std::pair<CheckReport, CheckReport> check_sphere_support(const UnitaryRep<Scalar>& rep,
                                                         Index n_samples, Index n_directions,
                                                         std::uint64_t seed, int threads,
                                                         double exceed_tol = 1e-12,
                                                         double reach_tol = 5e-3) {
  const MatrixX<Scalar> samples = sphere_image_sample(rep, n_samples, seed, threads);
  double worst_exceed = 0, worst_shortfall = 0;
  json witness_exceed = json::object(), witness_reach = json::object();
  for (Index dir = 0; dir < n_directions; ++dir) {
    SplitMix64 rng = stream_for(seed, 0xD0000u + static_cast<std::uint64_t>(dir));
    VectorX<Scalar> direction = random_real_vector<Scalar>(rng, rep.algebra().dim());
    const Scalar norm = direction.norm();
    if (norm > Scalar(0)) direction /= norm;
    const AlgebraElement<Scalar> x(rep.algebra(), direction);
    const Scalar exact = support_supremum(rep, x);
    const Scalar empirical = (samples * direction).maxCoeff();
    const double exceed = static_cast<double>(empirical - exact);
    const double shortfall = static_cast<double>(exact - empirical);
    if (exceed >= worst_exceed) {
      worst_exceed = exceed;
      witness_exceed = json{{"direction", real_vector_to_json<Scalar>(direction)},
                            {"support_exact", static_cast<double>(exact)},
                            {"support_empirical", static_cast<double>(empirical)}};
    }
    if (shortfall >= worst_shortfall) {
      worst_shortfall = shortfall;
      witness_reach = json{{"direction", real_vector_to_json<Scalar>(direction)},
                           {"support_exact", static_cast<double>(exact)},
                           {"support_empirical", static_cast<double>(empirical)}};
    }
  }
  return {detail::finish("sphere_support_bound", std::max(worst_exceed, 0.0), exceed_tol,
                         std::move(witness_exceed)),
          detail::finish("sphere_support_reach", std::max(worst_shortfall, 0.0), reach_tol,
                         std::move(witness_reach))};
}

/// The rep-level invariants as reports (skew-Hermitian generators, bracket
/// homomorphism), for the `checks` battery.
template <typename Scalar>
std::vector<CheckReport> rep_invariant_reports(const UnitaryRep<Scalar>& rep,
                                               const CheckConfig& cfg) {
  const double skew_tol = cfg.tol("skew_hermitian", 1e-12);
  const double hom_tol = cfg.tol("homomorphism", 1e-10);
  const RepReport<Scalar> r =
      verify_rep(rep, static_cast<Scalar>(skew_tol), static_cast<Scalar>(hom_tol));
  CheckReport skew = detail::finish("skew_hermitian", static_cast<double>(r.max_skew), skew_tol,
                                    json{{"generator", r.worst_skew_index}});
  Index wi = 0, wj = 0;
  r.homomorphism_defects.maxCoeff(&wi, &wj);
  CheckReport hom = detail::finish("homomorphism", static_cast<double>(r.max_homomorphism),
                                   hom_tol, json{{"i", wi}, {"j", wj}});
  return {std::move(skew), std::move(hom)};
}

/// The full verification battery over one representation.
template <typename Scalar>
std::vector<CheckReport> run_all_checks(const UnitaryRep<Scalar>& rep, const CheckConfig& cfg) {
  std::vector<CheckReport> reports = rep_invariant_reports(rep, cfg);
  reports.push_back(check_grad_sigma(rep, cfg, /*finite_difference=*/false));
  reports.push_back(check_grad_sigma(rep, cfg, /*finite_difference=*/true));
  reports.push_back(check_sigma_linearity(rep, cfg));
  reports.push_back(check_sigma_homomorphism(rep, cfg));
  reports.push_back(check_sigma_equivariance(rep, cfg));
  reports.push_back(check_moment_sigma_agreement(rep, cfg));
  reports.push_back(check_dmoment_fd(rep, cfg));
  reports.push_back(check_image_annihilator(rep, cfg));
  reports.push_back(check_kernel_annihilator(rep, cfg));
  reports.push_back(check_equivariance(rep, cfg));
  reports.push_back(check_poisson_morphism_linear(rep, cfg));
  reports.push_back(check_poisson_morphism_quadratic(rep, cfg));
  {
    CheckConfig flow_cfg = cfg;
    flow_cfg.samples = std::max<Index>(1, cfg.samples / 5);
    reports.push_back(check_flow(rep, flow_cfg));
  }
  return reports;
}

}  // namespace momentlab

#endif
