// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hexwalk/cli/app.hpp"
#include "hexwalk/dense.hpp"
#include "hexwalk/dynamics.hpp"
#include "hexwalk/localization.hpp"
#include "hexwalk/search.hpp"
#include "hexwalk/spectral.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace hexwalk;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double relative_spread(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return (*hi - *lo) / *lo;
}

void criterion_1(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937_64 rng(1);
  const std::vector<double> thetas{pi / 12, pi / 6, pi / 4, pi / 3, 5 * pi / 12, pi / 2, 2 * pi / 3, 0.9};
  double amp_error = 0.0, unitarity = 0.0;
  for (int n : {2, 4}) {
    const HexLattice lattice(n);
    const auto dim = static_cast<long>(lattice.size());
    for (double theta : thetas) {
      const WalkAngles angles = WalkAngles::uniform(theta);
      const Eigen::MatrixXcd u = dense::evolution_matrix(angles, lattice);
      unitarity = std::max(unitarity, (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim))
                                          .cwiseAbs()
                                          .maxCoeff());
      for (int trial = 0; trial < 100; ++trial) {
        const StateVector psi = random_state(lattice.size(), rng);
        amp_error = std::max(amp_error,
                             oracle::max_abs_diff(step(psi, angles, lattice),
                                                  dense::from_eigen(u * dense::to_eigen(psi))));
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.detail << "max amplitude error " << amp_error << ", max |U^dag U - I| " << unitarity
           << ", " << elapsed << " s";
  o.expect(amp_error < 1e-11, "amplitude error < 1e-11");
  o.expect(unitarity < 1e-12, "unitarity < 1e-12");
  o.expect(elapsed < 10.0, "runtime < 10 s");
}

void criterion_2(Outcome& o) {
  const HexLattice lattice(4);
  double worst = 0.0;
  for (double theta : {pi / 6, pi / 4, pi / 3}) {
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(
        dense::evolution_matrix(WalkAngles::uniform(theta), lattice), false);
    const std::vector<Complex> from_dense(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::vector<Complex> from_blocks;
    const SublatticeSpectrum spectrum(4, theta);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      from_blocks.push_back(std::polar(1.0, spectrum.eigensystem(i).phase));
      from_blocks.push_back(std::polar(1.0, -spectrum.eigensystem(i).phase));
    }
    worst = std::max(worst, oracle::multiset_distance(from_blocks, from_dense));
  }
  o.detail << "max eigenvalue mismatch " << worst;
  o.expect(worst < 1e-10, "mismatch < 1e-10");
}

void criterion_3(Outcome& o) {
  const HexLattice lattice(8);
  const WalkAngles angles = WalkAngles::uniform(pi / 3);
  std::mt19937_64 rng(3);
  std::vector<StateVector> states{InitialState::hexagon().prepare_centered(lattice),
                                  basis_state(lattice, {0, 0, 0})};
  for (int i = 0; i < 20; ++i) states.push_back(random_state(lattice.size(), rng));
  double worst = 0.0;
  for (const auto& psi : states) {
    for (long t : {1L, 7L, 50L}) {
      worst = std::max(worst, oracle::max_abs_diff(spectral_evolve(psi, t, angles, lattice),
                                                   evolve(psi, t, angles, lattice)));
    }
  }
  o.detail << "max spectral vs step error " << worst;
  o.expect(worst < 1e-8, "error < 1e-8");
}

void criterion_4(Outcome& o) {
  const auto start = Clock::now();
  const InitialState init = InitialState::hexagon();
  const HexLattice lattice(lattice_size_for(init, 100));
  // Expected order, fastest spreading first.
  const std::vector<std::pair<const char*, double>> order{
      {"pi/3", pi / 3}, {"11pi/30", 11 * pi / 30}, {"7pi/30", 7 * pi / 30},
      {"4pi/30", 4 * pi / 30}, {"pi/30", pi / 30}};
  double previous = INFINITY;
  o.detail << "n=" << lattice.n() << ", slopes";
  for (const auto& [name, theta] : order) {
    const SigmaSeries s = sigma_series(init, theta, 100, lattice);
    o.detail << " " << name << ":" << s.fit.slope << " (R2 " << s.fit.r_squared << ")";
    o.expect(s.fit_begin == 20 && s.fit_end == 100, "fit window [20, 100]");
    o.expect(s.fit.r_squared > 0.999, std::string("R2 > 0.999 at ") + name);
    o.expect(s.fit.slope < previous, std::string("ordering at ") + name);
    previous = s.fit.slope;
  }
  const double elapsed = seconds_since(start);
  o.detail << ", " << elapsed << " s";
  o.expect(elapsed < 120.0, "runtime < 2 min");
}

void criterion_5(Outcome& o) {
  const InitialState init = InitialState::hexagon();
  const long t_probe = 100;
  const HexLattice lattice(lattice_size_for(init, t_probe));
  const auto grid = uniform_grid(0.0, pi, 65);
  const double step = grid[1] - grid[0];
  const auto sweep = theta_sweep(init, t_probe, grid, lattice);
  auto argmax = [&](std::size_t lo, std::size_t hi) {
    std::size_t best = lo;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (sweep[i].sigma_over_t > sweep[best].sigma_over_t) best = i;
    }
    return best;
  };
  const std::size_t left = argmax(0, 32);
  const std::size_t right = argmax(32, 64);
  const double peak = std::max(sweep[left].sigma_over_t, sweep[right].sigma_over_t);
  o.detail << "peaks at " << sweep[left].theta / pi << "pi and " << sweep[right].theta / pi
           << "pi (value " << peak << "); sigma/t at 0, pi/2, pi: " << sweep[0].sigma_over_t
           << ", " << sweep[32].sigma_over_t << ", " << sweep[64].sigma_over_t;
  o.expect(std::abs(sweep[left].theta - pi / 3) <= step, "left peak within one grid step of pi/3");
  o.expect(std::abs(sweep[right].theta - 2 * pi / 3) <= step,
           "right peak within one grid step of 2pi/3");
  for (std::size_t i : {0UL, 32UL, 64UL}) {
    o.expect(sweep[i].sigma_over_t < 0.05 * peak, "trivial-angle value below 5% of peak");
  }
}

void criterion_6(Outcome& o) {
  o.detail << "phi_min*n/(sqrt3 pi):";
  for (int n : {64, 128, 256}) {
    const double ratio = phi_min(n, pi / 3).value * n / (std::sqrt(3.0) * pi);
    o.detail << " " << ratio;
    o.expect(std::abs(ratio - 1.0) < 0.02, "ratio within 2% at n=" + std::to_string(n));
  }
  const double a = phi_min(64, pi / 4).value;
  const double b = phi_min(256, pi / 4).value;
  o.detail << "; phi_min(pi/4) n=64: " << a << ", n=256: " << b;
  o.expect(std::abs(a - b) / a < 0.05, "pi/4 gap varies < 5%");
}

void criterion_7(Outcome& o) {
  const auto points = find_critical_points(pi / 3);
  double residual = 0.0, min_det = INFINITY;
  for (const auto& p : points) {
    residual = std::max({residual, p.equation_residual, p.gradient_residual});
    min_det = std::min(min_det, std::abs(p.hessian_det));
  }
  double grad_error = 0.0;
  constexpr int kGrid = 64;
  constexpr double h = 1e-6;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double k = -pi + 2 * pi * (i + 0.5) / kGrid;
      const double l = -pi + 2 * pi * (j + 0.5) / kGrid;
      if (std::sin(phase(k, l, pi / 3)) <= 0.1) continue;
      const Gradient g = phase_gradient(k, l, pi / 3);
      const double fk = (phase(k + h, l, pi / 3) - phase(k - h, l, pi / 3)) / (2 * h);
      const double fl = (phase(k, l + h, pi / 3) - phase(k, l - h, pi / 3)) / (2 * h);
      const double norm = std::max(std::hypot(g.dk, g.dl), 1e-3);
      grad_error = std::max(grad_error, std::hypot(g.dk - fk, g.dl - fl) / norm);
    }
  }
  o.detail << points.size() << " critical points, max residual " << residual
           << ", min |det H| " << min_det << ", max gradient rel. error " << grad_error;
  o.expect(points.size() == 8, "exactly 8 critical points");
  o.expect(residual < 1e-10, "residuals < 1e-10");
  o.expect(min_det > 1e-6, "|det H| > 1e-6");
  o.expect(grad_error < 1e-5, "gradient rel. error < 1e-5");
}

void criterion_8(Outcome& o) {
  const auto start = Clock::now();
  const InitialState init = InitialState::two_node();
  const HexLattice lattice(lattice_size_for(init, 400));
  const DecayFit fit = decay_fit({0, 0, 0}, init, pi / 3, 50, 400, lattice);
  std::vector<long> times;
  for (long t = 100; t <= 400; t += 25) times.push_back(t);
  const auto profile = peak_probability_profile(init, pi / 3, times, lattice);
  std::vector<double> t_values, scaled;
  for (const auto& s : profile) {
    t_values.push_back(static_cast<double>(s.t));
    scaled.push_back(s.max_probability * static_cast<double>(s.t * s.t));
  }
  const LinearFit trend = fit_line(t_values, scaled);
  const double elapsed = seconds_since(start);
  o.detail << "n=" << lattice.n() << ", decay exponent " << fit.exponent << " (R2 "
           << fit.r_squared << ", " << fit.envelope.size() << " maxima); max_v p*t^2 at t=100.."
           << "400: " << scaled.front() << " -> " << scaled.back() << ", trend slope "
           << trend.slope << "; " << elapsed << " s";
  o.expect(fit.exponent >= -2.5 && fit.exponent <= -1.5, "exponent in [-2.5, -1.5]");
  o.expect(trend.slope <= 0.0, "max_v p*t^2 non-increasing");
  o.expect(elapsed < 300.0, "runtime < 5 min");
}

void criterion_9(Outcome& o) {
  double worst = 0.0;
  for (int n : {4, 8, 12, 16}) {
    const double lambda = lambda_exact(n);
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(
        dense_search_operator(HexLattice(n), kSearchTheta, {0, 0, 0}), false);
    for (double sign : {1.0, -1.0}) {
      const Complex target = std::polar(1.0, sign * lambda);
      worst = std::max(worst, (solver.eigenvalues().array() - target).abs().minCoeff());
    }
  }
  o.detail << "max distance of e^{+-i lambda} to dense spectrum " << worst << "; lambda*n*C:";
  o.expect(worst < 1e-6, "eigenvalue distance < 1e-6");
  for (int n : {64, 128}) {
    const double value = lambda_exact(n) * n * c_constant(n);
    o.detail << " " << value;
    o.expect(std::abs(value - 1.0) < 0.1, "lambda n C within 10% at n=" + std::to_string(n));
  }
}

void criterion_10(Outcome& o) {
  const int n = 16;
  const HexLattice lattice(n);
  const Prediction pred = predicted_runtime_and_probability(n);
  const long t_max = static_cast<long>(std::ceil(2.5 * pred.t_pred));
  const SearchRun run = run_search({n, {0, 0, 0}, kSearchTheta, t_max}, lattice);
  const double t_error = std::abs(run.t_sim - pred.t_pred) / pred.t_pred;
  const double p_error = std::abs(run.p_sim - pred.p_pred) / pred.p_pred;
  const double corr = sinusoid_correlation(run.p_marked, pred.lambda, 2 * run.t_sim);
  const SearchRun control = run_search({n, {0, 0, 0}, pi / 4, t_max}, lattice);
  const double control_peak = *std::max_element(control.p_marked.begin(), control.p_marked.end());
  o.detail << "t_sim " << run.t_sim << " vs t_pred " << pred.t_pred << " (rel " << t_error
           << "), P_sim " << run.p_sim << " vs P_pred " << pred.p_pred << " (rel " << p_error
           << "), correlation " << corr << ", pi/4 max p " << control_peak << " vs 10/N "
           << 10.0 / lattice.size();
  o.expect(run.peak_found, "peak found");
  o.expect(t_error <= 0.15, "runtime within 15%");
  o.expect(p_error <= 0.30, "probability within 30%");
  o.expect(corr > 0.95, "correlation > 0.95");
  o.expect(control_peak < 10.0 / lattice.size(), "no pi/4 peak above 10/N");
}

void criterion_11(Outcome& o) {
  std::vector<double> runtime, probability;
  bool bounds = true;
  for (int n : {32, 64, 128}) {
    const Prediction p = predicted_runtime_and_probability(n);
    const double big_n = 2.0 * n * n;
    runtime.push_back(p.t_pred / std::sqrt(big_n * std::log(big_n)));
    probability.push_back(p.p_pred * std::log(big_n));
    bounds = bounds && verify_bound_chain(n).all_hold();
  }
  std::vector<double> ratios;
  for (int n : {16, 32, 64, 128}) ratios.push_back(c_squared(2 * n) / c_squared(n));
  const bool ratios_decrease = std::is_sorted(ratios.rbegin(), ratios.rend()) &&
                               std::all_of(ratios.begin(), ratios.end(), [](double r) { return r > 1.0; });
  o.detail << "t_pred/sqrt(N ln N) spread " << relative_spread(runtime) << ", P_pred ln N spread "
           << relative_spread(probability) << ", bound chain " << (bounds ? "holds" : "violated")
           << ", S(4)=" << s_sum(4) << ", C^2(2n)/C^2(n):";
  for (double r : ratios) o.detail << " " << r;
  o.expect(relative_spread(runtime) < 0.15, "runtime scaling spread < 15%");
  o.expect(relative_spread(probability) < 0.20, "probability scaling spread < 20%");
  o.expect(bounds, "bound chain holds");
  o.expect(s_sum(4) == 2.5, "S(4) = 2.5");
  o.expect(ratios_decrease, "C^2 ratio decreasing toward 1");
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hexwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion_12(Outcome& o, const fs::path& scratch) {
  const std::vector<std::vector<std::string>> runs{
      {"evolve", "--theta", "pi/3", "--tmax", "30"},
      {"sigma", "--tmax", "30", "--grid", "13"},
      {"search", "--sizes", "8,16"},
      {"verify", "--n", "4", "--trials", "5", "--seed", "42"},
  };
  std::vector<fs::path> dirs{scratch / "run_a", scratch / "run_b"};
  for (const auto& dir : dirs) {
    fs::remove_all(dir);
    for (auto args : runs) {
      args.push_back("--out");
      args.push_back(dir.string());
      o.expect(run_cli(args) == 0, "cli run " + args.front() + " succeeds");
    }
  }
  const std::vector<std::string> expected{"distribution.csv", "sigma_series.csv", "sigma_fits.csv",
                                          "theta_sweep.csv",  "search_scaling.csv", "search_curve.csv",
                                          "verify.csv"};
  for (const auto& file : expected) {
    const std::string first = slurp(dirs[0] / file);
    o.expect(!first.empty(), file + " written");
    o.expect(first == slurp(dirs[1] / file), file + " identical");
  }
  o.detail << expected.size() << " CSV files compared byte for byte";
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "hexwalk_acceptance";
  fs::create_directories(scratch);

  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"unitarity and oracle equivalence", criterion_1},
      {"spectrum equivalence", criterion_2},
      {"path equivalence", criterion_3},
      {"sigma(t) slopes", criterion_4},
      {"sigma/t theta sweep", criterion_5},
      {"phase gap asymptote", criterion_6},
      {"critical points", criterion_7},
      {"no localization", criterion_8},
      {"search eigenphase", criterion_9},
      {"search simulation vs prediction", criterion_10},
      {"scaling laws and bound chain", criterion_11},
      {"determinism", [&](Outcome& o) { criterion_12(o, scratch); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      criteria[i].second(outcome);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << " [exception: " << e.what() << "]";
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " ("
              << criteria[i].first << "): " << outcome.detail.str() << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
