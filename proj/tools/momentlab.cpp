// momentlab CLI: construct or load unitary representations, verify the
// moment-map identities, evaluate mu, integrate Hamiltonian flows, and sample
// the sphere image.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 parse/input
// error, 3 numeric failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "momentlab/momentlab.hpp"

namespace {

using namespace momentlab;
using Rep = UnitaryRep<double>;

struct Options {
  std::string rep;
  std::uint64_t seed = 12345;
  long samples = -1;
  std::string out = "-";
  std::string format;
  std::vector<std::string> tol;
  std::vector<std::vector<double>> directions;
  std::string x_path;
  double t = 1.0;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--rep", opt.rep, "builtin name (su2:spin=..., torus:..., sum(,), tensor(,)) or JSON path")
      ->required();
  cmd->add_option("--seed", opt.seed, "64-bit sampling seed");
  cmd->add_option("--samples", opt.samples, "number of random samples")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opt.out, "output path, or - for stdout");
  cmd->add_option("--format", opt.format, "output format (default: csv for row output, json for reports)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol", opt.tol, "tolerance override <check>=<value>, repeatable");
}

int worker_threads() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 8);
  if (const char* env = std::getenv("MOMENTLAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& entries) {
  std::map<std::string, double> out;
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    detail::require(eq != std::string::npos && eq > 0,
                    "--tol expects <check>=<value>, got '" + entry + "'");
    try {
      out[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("--tol: cannot parse value in '" + entry + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Rep load_rep(const std::string& source) {
  if (is_builtin_spec(source)) return parse_builtin_rep<double>(source);
  return rep_from_json<double>(json::parse(read_file(source)), /*validate=*/false);
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path != "-") {
      file.open(path, std::ios::binary);
      detail::require(static_cast<bool>(file), "cannot open output '" + path + "'");
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
};

void emit_json(const json& j, Output& out) {
  dump_json(j, out.stream(), 2);
  out.stream() << "\n";
}

AlgebraElement<double> direction_element(const Rep& rep, const std::vector<double>& coords) {
  detail::require(static_cast<Index>(coords.size()) == rep.algebra().dim(),
                  "--direction: expected " + std::to_string(rep.algebra().dim()) +
                      " coordinates");
  VectorX<double> v(static_cast<Index>(coords.size()));
  for (Index k = 0; k < v.size(); ++k) v(k) = coords[static_cast<std::size_t>(k)];
  return rep.element(std::move(v));
}

/// Representations loaded from JSON must pass verify_rep before they are used
/// in computations; defective inputs turn into an exit-1 report.
bool ensure_valid(const Rep& rep, const std::map<std::string, double>& tol, Output& out) {
  const double skew = tol.count("skew_hermitian") ? tol.at("skew_hermitian") : 1e-12;
  const double hom = tol.count("homomorphism") ? tol.at("homomorphism") : 1e-10;
  const auto report = verify_rep(rep, skew, hom);
  if (!report.pass) emit_json(to_json(report), out);
  return report.pass;
}

int cmd_verify(const Options& opt) {
  const Rep rep = load_rep(opt.rep);
  const auto tol = parse_tolerances(opt.tol);
  Output out(opt.out);
  const double skew = tol.count("skew_hermitian") ? tol.at("skew_hermitian") : 1e-12;
  const double hom = tol.count("homomorphism") ? tol.at("homomorphism") : 1e-10;
  const auto report = verify_rep(rep, skew, hom);
  emit_json(to_json(report), out);
  return report.pass ? 0 : 1;
}

int cmd_checks(const Options& opt) {
  const Rep rep = load_rep(opt.rep);
  Output out(opt.out);
  CheckConfig cfg;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples > 0 ? static_cast<Index>(opt.samples) : 100;
  cfg.threads = worker_threads();
  cfg.tolerances = parse_tolerances(opt.tol);

  const auto reports = run_all_checks(rep, cfg);
  bool all_pass = true;
  json checks = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    checks.push_back(r.to_json());
  }
  emit_json(json{{"rep", opt.rep},
                 {"seed", opt.seed},
                 {"samples", cfg.samples},
                 {"pass", all_pass},
                 {"checks", std::move(checks)}},
            out);
  return all_pass ? 0 : 1;
}

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    os << (i ? "," : "") << format_double(values[i]);
  os << "\n";
}

int cmd_moment_eval(const Options& opt) {
  const Rep rep = load_rep(opt.rep);
  const auto tol = parse_tolerances(opt.tol);
  Output out(opt.out);
  if (!ensure_valid(rep, tol, out)) return 1;

  std::optional<AlgebraElement<double>> direction;
  if (!opt.directions.empty()) direction = direction_element(rep, opt.directions.front());

  std::vector<VectorXc<double>> states;
  if (!opt.x_path.empty()) {
    const VectorXc<double> x = state_from_json<double>(json::parse(read_file(opt.x_path)));
    detail::require(x.size() == rep.dim(), "state vector does not match representation dimension");
    states.push_back(x);
  } else if (opt.samples > 0) {
    for (long k = 0; k < opt.samples; ++k) {
      SplitMix64 rng = stream_for(opt.seed, static_cast<std::uint64_t>(k));
      states.push_back(random_unit_state<double>(rng, rep.dim()));
    }
  } else {
    states.push_back(rep.space().zero());
  }

  if (opt.format == "csv") {
    std::ostream& os = out.stream();
    std::vector<std::string> header;
    for (Index k = 0; k < rep.dim(); ++k) {
      header.push_back("x_re_" + std::to_string(k));
      header.push_back("x_im_" + std::to_string(k));
    }
    for (const auto& label : rep.algebra().labels()) header.push_back("mu_" + label);
    if (direction) {
      header.push_back("sigma");
      for (Index k = 0; k < rep.dim(); ++k) {
        header.push_back("grad_re_" + std::to_string(k));
        header.push_back("grad_im_" + std::to_string(k));
      }
    }
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& x : states) {
      std::vector<double> row;
      for (Index k = 0; k < rep.dim(); ++k) {
        row.push_back(x(k).real());
        row.push_back(x(k).imag());
      }
      const auto mu = moment(rep, x);
      for (Index k = 0; k < mu.coords.size(); ++k) row.push_back(mu.coords(k));
      if (direction) {
        row.push_back(sigma(rep, *direction, x));
        const VectorXc<double> g = rho_prime(rep, *direction) * x;
        for (Index k = 0; k < g.size(); ++k) {
          row.push_back(g(k).real());
          row.push_back(g(k).imag());
        }
      }
      write_csv_row(out.stream(), row);
    }
  } else {
    json rows = json::array();
    for (const auto& x : states) {
      json row{{"x", to_json<double>(x)},
               {"mu", real_vector_to_json<double>(moment(rep, x).coords)}};
      if (direction) {
        row["sigma"] = sigma(rep, *direction, x);
        row["grad_sigma"] = to_json<double>((rho_prime(rep, *direction) * x).eval());
      }
      rows.push_back(std::move(row));
    }
    emit_json(json{{"rep", opt.rep}, {"labels", rep.algebra().labels()}, {"rows", std::move(rows)}},
              out);
  }
  return 0;
}

int cmd_flow(const Options& opt) {
  const Rep rep = load_rep(opt.rep);
  const auto tol = parse_tolerances(opt.tol);
  Output out(opt.out);
  if (!ensure_valid(rep, tol, out)) return 1;
  detail::require(!opt.directions.empty(), "flow: --direction is required");
  const auto x = direction_element(rep, opt.directions.front());

  VectorXc<double> x0;
  if (!opt.x_path.empty()) {
    x0 = state_from_json<double>(json::parse(read_file(opt.x_path)));
    detail::require(x0.size() == rep.dim(), "state vector does not match representation dimension");
  } else {
    SplitMix64 rng = stream_for(opt.seed, 0);
    x0 = random_unit_state<double>(rng, rep.dim());
  }

  const double flow_tol = tol.count("flow") ? tol.at("flow") : 1e-8;
  const VectorXc<double> flowed = hamiltonian_flow(rep, x, x0, opt.t);
  const VectorXc<double> exact =
      rho(rep, rep.element((opt.t * x.coords).eval())) * x0;
  const double defect = (flowed - exact).norm();
  const double norm_drift = std::abs(flowed.norm() - x0.norm());
  const double energy_drift = std::abs(sigma(rep, x, flowed) - sigma(rep, x, x0));
  const bool pass = defect <= flow_tol && norm_drift <= flow_tol && energy_drift <= flow_tol;
  emit_json(json{{"check", "flow"},
                 {"t", opt.t},
                 {"defect", defect},
                 {"norm_drift", norm_drift},
                 {"energy_drift", energy_drift},
                 {"tolerance", flow_tol},
                 {"pass", pass},
                 {"x0", to_json<double>(x0)},
                 {"final", to_json<double>(flowed)}},
            out);
  return pass ? 0 : 1;
}

int cmd_sphere(const Options& opt) {
  const Rep rep = load_rep(opt.rep);
  const auto tol = parse_tolerances(opt.tol);
  Output out(opt.out);
  if (!ensure_valid(rep, tol, out)) return 1;
  const Index n = opt.samples > 0 ? static_cast<Index>(opt.samples) : 10000;
  const MatrixX<double> samples = sphere_image_sample(rep, n, opt.seed, worker_threads());

  if (opt.directions.empty()) {
    std::ostream& os = out.stream();
    for (const auto& label : rep.algebra().labels()) os << "mu_" << label << ",";
    os << "x_norm\n";
    std::vector<double> row(static_cast<std::size_t>(samples.cols()) + 1);
    for (Index k = 0; k < samples.rows(); ++k) {
      for (Index c = 0; c < samples.cols(); ++c) row[static_cast<std::size_t>(c)] = samples(k, c);
      row.back() = 1.0;
      write_csv_row(os, row);
    }
    return 0;
  }

  const double bound_tol =
      tol.count("sphere_support_bound") ? tol.at("sphere_support_bound") : 1e-12;
  const double reach_tol =
      tol.count("sphere_support_reach") ? tol.at("sphere_support_reach") : 5e-3;
  bool all_pass = true;
  json dirs = json::array();
  for (const auto& coords : opt.directions) {
    const auto x = direction_element(rep, coords);
    const double exact = support_supremum(rep, x);
    const double empirical = (samples * x.coords).maxCoeff();
    const double exceed = std::max(empirical - exact, 0.0);
    const double shortfall = std::max(exact - empirical, 0.0);
    const bool pass = exceed <= bound_tol && shortfall <= reach_tol;
    all_pass = all_pass && pass;
    dirs.push_back(json{{"direction", real_vector_to_json<double>(x.coords)},
                        {"support_exact", exact},
                        {"support_empirical", empirical},
                        {"exceed", exceed},
                        {"shortfall", shortfall},
                        {"pass", pass}});
  }
  emit_json(json{{"rep", opt.rep},
                 {"samples", n},
                 {"seed", opt.seed},
                 {"bound_tolerance", bound_tol},
                 {"reach_tolerance", reach_tol},
                 {"pass", all_pass},
                 {"directions", std::move(dirs)}},
            out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment maps for finite-dimensional unitary representations"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* verify = app.add_subcommand("verify", "check the representation invariants");
  add_common(verify, opt);
  CLI::App* moment_eval = app.add_subcommand("moment-eval", "evaluate the moment map");
  add_common(moment_eval, opt);
  moment_eval->add_option("--x", opt.x_path, "state vector JSON path (default: zero vector)");
  moment_eval->add_option("--direction", opt.directions,
                          "algebra direction [a,b,...] for sigma and grad sigma columns");
  CLI::App* checks = app.add_subcommand("checks", "run the full verification battery");
  add_common(checks, opt);
  CLI::App* flow = app.add_subcommand("flow", "integrate the Hamiltonian flow of sigma(X)");
  add_common(flow, opt);
  flow->add_option("--direction", opt.directions, "algebra direction X as [a,b,...]")
      ->required();
  flow->add_option("--x", opt.x_path, "initial state JSON path (default: seeded unit vector)");
  flow->add_option("--t", opt.t, "flow time");
  CLI::App* sphere = app.add_subcommand("sphere-sample", "sample mu on the unit sphere");
  add_common(sphere, opt);
  sphere->add_option("--direction", opt.directions,
                     "direction(s) [a,b,...] for support-function reporting, repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.format.empty())
    opt.format = (app.got_subcommand(moment_eval) || app.got_subcommand(sphere)) ? "csv" : "json";

  try {
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(moment_eval)) return cmd_moment_eval(opt);
    if (app.got_subcommand(checks)) return cmd_checks(opt);
    if (app.got_subcommand(flow)) return cmd_flow(opt);
    return cmd_sphere(opt);
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
}
