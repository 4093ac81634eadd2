#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "config.hpp"
#include "csv.hpp"
#include "hexwalk/cli/app.hpp"
#include "hexwalk/dense.hpp"
#include "hexwalk/dynamics.hpp"
#include "hexwalk/error.hpp"
#include "hexwalk/evolution.hpp"
#include "hexwalk/localization.hpp"
#include "hexwalk/search.hpp"
#include "hexwalk/spectral.hpp"
#include "svg.hpp"

namespace hexwalk::cli {

namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

std::string num(double v) { return format_number(v); }
std::string num(long v) { return format_number(v); }
std::string num(int v) { return format_number(v); }

double single_angle(const ExperimentConfig& cfg, double fallback) {
  const auto angles = cfg.angles();
  require(angles.size() <= 1, ErrorKind::invalid_parameter,
          cfg.command + " takes a single --theta value");
  return angles.empty() ? fallback : angles.front();
}

InitialState initial_state(const ExperimentConfig& cfg, const char* fallback) {
  return InitialState::from_name(cfg.init.empty() ? fallback : cfg.init);
}

HexLattice lattice_for(const ExperimentConfig& cfg, const InitialState& init, long steps) {
  return HexLattice(cfg.n > 0 ? cfg.n : lattice_size_for(init, steps));
}

Metadata with(Metadata base, std::initializer_list<std::pair<std::string, std::string>> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

void cmd_evolve(const ExperimentConfig& cfg, std::ostream& out) {
  const InitialState init = initial_state(cfg, "hexagon");
  const double theta = single_angle(cfg, kPi / 3.0);
  const long steps = cfg.t_max < 0 ? 58 : cfg.t_max;
  const HexLattice lattice = lattice_for(cfg, init, steps);
  require(steps <= max_unwrapped_steps(init, lattice), ErrorKind::invalid_parameter,
          "lattice too small: the walker would wrap around within " + std::to_string(steps) + " steps");

  const StateVector state =
      Walk(lattice, WalkAngles::uniform(theta)).evolve(init.prepare_centered(lattice), steps);
  const auto p = probability_distribution(state);

  const auto meta = with(cfg.metadata(), {{"resolved_n", num(lattice.n())},
                                          {"resolved_theta", num(theta)},
                                          {"steps", num(steps)}});
  CsvWriter csv(cfg.out / "distribution.csv", meta, {"x", "y", "s", "px", "py", "p"});
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const VertexLabel v = lattice.label(i);
    const Point2D r = HexLattice::position(v);
    csv.row({num(v.x), num(v.y), num(v.s), num(r.x), num(r.y), num(p[i])});
  }
  write_heatmap_svg(cfg.out / "distribution.svg", lattice, p);
  out << "evolve: n=" << lattice.n() << " t=" << steps << " sigma="
      << num(std_deviation(state, lattice)) << '\n';
}

void cmd_sigma(const ExperimentConfig& cfg, std::ostream& out) {
  const InitialState init = initial_state(cfg, "hexagon");
  std::vector<double> thetas = cfg.angles();
  if (thetas.empty()) {
    for (const int m : {1, 4, 7, 10, 11}) thetas.push_back(m * kPi / 30.0);
  }
  require(cfg.grid >= 2, ErrorKind::invalid_parameter, "theta grid needs at least two points");
  const long t_max = cfg.t_max < 0 ? 100 : cfg.t_max;
  const HexLattice lattice = lattice_for(cfg, init, t_max);
  const auto meta = with(cfg.metadata(), {{"resolved_n", num(lattice.n())},
                                          {"resolved_tmax", num(t_max)}});

  CsvWriter series_csv(cfg.out / "sigma_series.csv", meta, {"theta", "t", "sigma"});
  CsvWriter fits_csv(cfg.out / "sigma_fits.csv", meta,
                     {"theta", "slope", "intercept", "r_squared", "fit_begin", "fit_end"});
  for (const double theta : thetas) {
    const SigmaSeries s = sigma_series(init, theta, t_max, lattice);
    for (std::size_t i = 0; i < s.t.size(); ++i) series_csv.row({num(theta), num(s.t[i]), num(s.sigma[i])});
    fits_csv.row({num(theta), num(s.fit.slope), num(s.fit.intercept), num(s.fit.r_squared),
                  num(s.fit_begin), num(s.fit_end)});
    out << "sigma: theta=" << num(theta) << " slope=" << num(s.fit.slope)
        << " r2=" << num(s.fit.r_squared) << '\n';
  }

  const auto grid = uniform_grid(0.0, kPi, cfg.grid);
  CsvWriter sweep_csv(cfg.out / "theta_sweep.csv", meta, {"theta", "sigma_over_t"});
  for (const auto& pt : theta_sweep(init, t_max, grid, lattice)) {
    sweep_csv.row({num(pt.theta), num(pt.sigma_over_t)});
  }
}

void cmd_localization(const ExperimentConfig& cfg, std::ostream& out) {
  const double theta = single_angle(cfg, kPi / 3.0);
  const auto meta_base = cfg.metadata();

  CsvWriter cp_csv(cfg.out / "critical_points.csv", with(meta_base, {{"resolved_theta", num(theta)}}),
                   {"k", "l", "equation_residual", "gradient_residual", "sin_phase",
                    "hessian_det_numeric", "hessian_det_analytic", "hessian_det_formula"});
  const auto points = find_critical_points(theta);
  for (const auto& cp : points) {
    const bool regular = cp.sin_phase >= 1e-9;
    cp_csv.row({num(cp.k), num(cp.l), num(cp.equation_residual), num(cp.gradient_residual),
                num(cp.sin_phase), num(cp.hessian_det),
                num(regular ? hessian_det_analytic(cp.k, cp.l, theta) : std::nan("")),
                num(regular ? hessian_det_formula(cp.k, cp.l, theta) : std::nan(""))});
  }
  out << "localization: " << points.size() << " critical points\n";

  const InitialState init = initial_state(cfg, "two-node");
  const long t_end = cfg.t_max < 0 ? 400 : cfg.t_max;
  const HexLattice lattice = lattice_for(cfg, init, t_end);
  const auto meta = with(meta_base, {{"resolved_n", num(lattice.n())},
                                     {"resolved_theta", num(theta)},
                                     {"resolved_tmax", num(t_end)}});
  const DecayFit fit = decay_fit(cfg.vertex_label(), init, theta, cfg.t_min, t_end, lattice);

  CsvWriter decay_csv(cfg.out / "decay.csv", meta, {"t", "p_vertex", "envelope"});
  std::vector<bool> on_envelope(fit.t.size(), false);
  for (const auto i : fit.envelope) on_envelope[i] = true;
  for (std::size_t i = 0; i < fit.t.size(); ++i) {
    decay_csv.row({num(fit.t[i]), num(fit.probability[i]), on_envelope[i] ? "1" : "0"});
  }
  CsvWriter fit_csv(cfg.out / "decay_fit.csv", meta,
                    {"theta", "x", "y", "s", "t_begin", "t_end", "exponent", "r_squared",
                     "envelope_points"});
  fit_csv.row({num(theta), num(fit.vertex.x), num(fit.vertex.y), num(fit.vertex.s), num(cfg.t_min),
               num(t_end), num(fit.exponent), num(fit.r_squared),
               num(static_cast<long>(fit.envelope.size()))});
  out << "localization: decay exponent " << num(fit.exponent) << '\n';

  std::vector<long> times;
  for (long t = cfg.t_min; t <= t_end; t += 50) times.push_back(t);
  CsvWriter peak_csv(cfg.out / "peak_profile.csv", meta, {"t", "max_p", "max_p_t2"});
  for (const auto& s : peak_probability_profile(init, theta, times, lattice)) {
    const double t = static_cast<double>(s.t);
    peak_csv.row({num(s.t), num(s.max_probability), num(s.max_probability * t * t)});
  }
}

void cmd_search(const ExperimentConfig& cfg, std::ostream& out) {
  std::vector<int> sizes = cfg.sizes;
  if (sizes.empty()) sizes = cfg.n > 0 ? std::vector<int>{cfg.n} : std::vector<int>{8, 16, 32, 64};
  for (const int n : sizes) {
    require(n >= 8 && n % 2 == 0, ErrorKind::invalid_parameter, "search sizes must be even and >= 8");
  }
  std::sort(sizes.begin(), sizes.end());
  const double theta = single_angle(cfg, kSearchTheta);
  const bool analytic = std::abs(theta - kSearchTheta) < 1e-12;
  const auto meta = with(cfg.metadata(), {{"resolved_theta", num(theta)}});

  CsvWriter table(cfg.out / "search_scaling.csv", meta,
                  {"n", "N", "lambda", "C", "S", "t_pred", "P_pred", "t_sim", "P_sim",
                   "t_sim_over_sqrt_NlnN", "t_pred_over_sqrt_NlnN", "P_pred_lnN", "bounds",
                   "peak_found"});
  SearchRun last_run;
  Prediction last_pred{};
  for (const int n : sizes) {
    const HexLattice lattice(n);
    const double big_n = static_cast<double>(lattice.size());
    const double root = std::sqrt(big_n * std::log(big_n));
    Prediction pred{std::nan(""), std::nan(""), std::nan("")};
    if (analytic) pred = predicted_runtime_and_probability(n);

    SearchConfig sc;
    sc.n = n;
    sc.marked = cfg.marked_label();
    sc.theta = theta;
    sc.t_max = cfg.t_max >= 0 ? cfg.t_max
               : analytic     ? static_cast<long>(std::ceil(2.5 * pred.t_pred))
                              : static_cast<long>(lattice.size());
    const SearchRun run = run_search(sc, lattice);
    if (analytic && static_cast<double>(sc.t_max) < 2.0 * pred.t_pred) {
      out << "search: warning: t_max=" << sc.t_max << " below 2*t_pred for n=" << n << '\n';
    }
    const bool bounds = verify_bound_chain(n).all_hold();
    table.row({num(n), num(static_cast<long>(lattice.size())), num(pred.lambda),
               num(c_constant(n)), num(s_sum(n)), num(pred.t_pred), num(pred.p_pred),
               num(run.t_sim), num(run.p_sim), num(static_cast<double>(run.t_sim) / root),
               num(pred.t_pred / root), num(pred.p_pred * std::log(big_n)),
               bounds ? "pass" : "fail", run.peak_found ? "1" : "0"});
    out << "search: n=" << n << " t_sim=" << run.t_sim << " P_sim=" << num(run.p_sim) << '\n';
    last_run = run;
    last_pred = pred;
  }

  CsvWriter curve(cfg.out / "search_curve.csv",
                  with(meta, {{"curve_n", num(sizes.back())}}), {"t", "p_marked", "model"});
  for (std::size_t t = 0; t < last_run.p_marked.size(); ++t) {
    const double s = std::sin(last_pred.lambda * static_cast<double>(t));
    curve.row({num(static_cast<long>(t)), num(last_run.p_marked[t]), num(last_pred.p_pred * s * s)});
  }
}

/// Randomised oracle checks; reproducible through --seed.
void cmd_verify(const ExperimentConfig& cfg, std::ostream& out) {
  const HexLattice lattice(cfg.n > 0 ? cfg.n : 4);
  std::vector<double> thetas = cfg.angles();
  if (thetas.empty()) thetas = uniform_grid(0.0, kPi, 8);
  require(cfg.trials >= 1, ErrorKind::invalid_parameter, "--trials must be positive");
  const long t_spec = cfg.t_max < 0 ? 7 : cfg.t_max;

  std::mt19937_64 rng(cfg.seed);
  CsvWriter csv(cfg.out / "verify.csv", with(cfg.metadata(), {{"resolved_n", num(lattice.n())}}),
                {"check", "theta", "trial", "error", "tolerance", "pass"});
  bool all_pass = true;
  auto record = [&](const char* check, double theta, int trial, double error, double tol) {
    const bool pass = error < tol;
    all_pass = all_pass && pass;
    csv.row({check, num(theta), num(trial), num(error), num(tol), pass ? "1" : "0"});
  };

  for (const double theta : thetas) {
    const Walk walk(lattice, WalkAngles::uniform(theta));
    const bool dense_ok = lattice.size() <= dense::kMaxDimension;
    Eigen::MatrixXcd u;
    if (dense_ok) u = dense::evolution_matrix(WalkAngles::uniform(theta), lattice);
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const StateVector psi = random_state(lattice.size(), rng);
      const StateVector stepped = walk.step(psi);
      record("norm", theta, trial, std::abs(norm(stepped) - 1.0), 1e-12);
      if (dense_ok) {
        const Eigen::VectorXcd ref = u * dense::to_eigen(psi);
        record("sparse_vs_dense", theta, trial,
               (ref - dense::to_eigen(stepped)).cwiseAbs().maxCoeff(), 1e-11);
      }
      const StateVector a = walk.evolve(psi, t_spec);
      const StateVector b = spectral_evolve(psi, t_spec, WalkAngles::uniform(theta), lattice);
      double err = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
      record("spectral_vs_sparse", theta, trial, err, 1e-8);
    }
  }
  out << "verify: " << (all_pass ? "all checks passed" : "FAILURES recorded") << '\n';
  if (!all_pass) fail(ErrorKind::numerical_failure, "oracle verification failed");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter:
    case ErrorKind::dimension_mismatch:
    case ErrorKind::unsupported_configuration:
      return kValidation;
    case ErrorKind::singular_point:
    case ErrorKind::numerical_failure:
      return kNumerical;
    case ErrorKind::io:
      return kIo;
  }
  return kNumerical;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Staggered quantum walk on the hexagonal lattice"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  ExperimentConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Hexagons per direction (even); 0 picks a size automatically");
    sub->add_option("--theta", cfg.theta, "Walk angle(s), e.g. pi/3 or 1.047")->delimiter(',');
    sub->add_option("--tmax", cfg.t_max, "Number of steps / end of time window");
    sub->add_option("--out", cfg.out, "Output directory");
    sub->add_option("--seed", cfg.seed, "Seed for randomised checks");
  };

  auto* evolve = app.add_subcommand("evolve", "Distribution after t steps (CSV + SVG)");
  add_common(evolve);
  evolve->add_option("--init", cfg.init, "two-node | hexagon | single-node");

  auto* sigma = app.add_subcommand("sigma", "sigma(t) fits and sigma/t theta sweep");
  add_common(sigma);
  sigma->add_option("--init", cfg.init, "two-node | hexagon | single-node");
  sigma->add_option("--grid", cfg.grid, "Number of sweep angles over [0, pi]");

  auto* loc = app.add_subcommand("localization", "Critical points and decay of p_vertex(t)");
  add_common(loc);
  loc->add_option("--init", cfg.init, "two-node | hexagon | single-node");
  loc->add_option("--tmin", cfg.t_min, "Start of the decay window");
  loc->add_option("--vertex", cfg.vertex, "Vertex x y s, relative to the initial state origin")
      ->expected(3);

  auto* search = app.add_subcommand("search", "Spatial search scaling table and curve");
  add_common(search);
  search->add_option("--marked", cfg.marked, "Marked vertex x y s")->expected(3);
  search->add_option("--sizes", cfg.sizes, "Lattice sizes for the scaling table")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Randomised oracle checks (sparse vs dense vs spectral)");
  add_common(verify);
  verify->add_option("--trials", cfg.trials, "Random states per angle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    fs::create_directories(cfg.out);
    if (cfg.command == "evolve") cmd_evolve(cfg, out);
    else if (cfg.command == "sigma") cmd_sigma(cfg, out);
    else if (cfg.command == "localization") cmd_localization(cfg, out);
    else if (cfg.command == "search") cmd_search(cfg, out);
    else if (cfg.command == "verify") cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error (i/o): " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

}  // namespace hexwalk::cli
