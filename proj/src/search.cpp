#include "hexwalk/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hexwalk/dense.hpp"
#include "hexwalk/error.hpp"
#include "hexwalk/spectral.hpp"

namespace hexwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_search_size(int n, int minimum) {
  require(n >= minimum && n % 2 == 0, ErrorKind::invalid_parameter,
          "lattice size must be even and >= " + std::to_string(minimum));
}

}  // namespace

StateVector uniform_state(const HexLattice& lattice) {
  return StateVector(lattice.size(), Complex(1.0 / (std::sqrt(2.0) * lattice.n()), 0.0));
}

StateVector search_step(const StateVector& state, const SearchConfig& config,
                        const HexLattice& lattice) {
  require_dimension(state, lattice);
  StateVector out = state;
  out[lattice.index(config.marked)] *= -1.0;
  Walk(lattice, WalkAngles::uniform(config.theta)).step_inplace(out);
  return out;
}

SearchRun run_search(const SearchConfig& config, const HexLattice& lattice) {
  require(config.t_max >= 2, ErrorKind::invalid_parameter, "search needs t_max >= 2");
  require(config.theta > 0.0 && config.theta < kPi, ErrorKind::invalid_parameter,
          "search angle must lie in (0, pi)");
  const std::size_t marked = lattice.index(config.marked);
  const Walk walk(lattice, WalkAngles::uniform(config.theta));

  SearchRun run;
  StateVector state = uniform_state(lattice);
  run.p_marked.reserve(static_cast<std::size_t>(config.t_max) + 1);
  run.p_marked.push_back(std::norm(state[marked]));
  for (long t = 1; t <= config.t_max; ++t) {
    state[marked] = -state[marked];
    walk.step_inplace(state);
    run.p_marked.push_back(std::norm(state[marked]));
  }

  const auto& p = run.p_marked;
  std::vector<double> smooth(p.size() - 1);
  for (std::size_t t = 0; t + 1 < p.size(); ++t) smooth[t] = 0.5 * (p[t] + p[t + 1]);
  for (std::size_t t = 1; t + 1 < smooth.size(); ++t) {
    if (smooth[t] >= smooth[t - 1] && smooth[t] > smooth[t + 1]) {
      const std::size_t best = p[t + 1] > p[t] ? t + 1 : t;
      run.t_sim = static_cast<long>(best);
      run.p_sim = p[best];
      run.peak_found = true;
      break;
    }
  }
  if (!run.peak_found) {
    const auto it = std::max_element(p.begin(), p.end());
    run.t_sim = static_cast<long>(it - p.begin());
    run.p_sim = *it;
  }
  return run;
}

SecularEquation::SecularEquation(int n, double theta) {
  require_search_size(n, 4);
  const SublatticeSpectrum spectrum(n, theta);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const auto& es = spectrum.eigensystem(i);
    const double wp = std::norm(es.v_plus[0]);
    const double wm = std::norm(es.v_minus[0]);
    if (kPi - es.phase < 1e-12) {
      pole_weight_ += wp + wm;
    } else {
      terms_.push_back({es.phase, wp, wm});
    }
  }
  constexpr double kEps = 1e-10;
  low_ = kEps;
  high_ = phi_min(n, theta).value - kEps;
}

double SecularEquation::operator()(double lambda) const {
  // sin x / (1 + cos x) = tan(x / 2), which stays accurate next to x = pi.
  double sum = -pole_weight_ / std::tan(0.5 * lambda);
  for (const auto& term : terms_) {
    sum += term.w_plus * std::tan(0.5 * (lambda + term.phase)) +
           term.w_minus * std::tan(0.5 * (lambda - term.phase));
  }
  return sum;
}

double lambda_exact(int n, double theta) {
  const SecularEquation secular(n, theta);
  double lo = secular.bracket_low();
  double hi = secular.bracket_high();
  double f_lo = secular(lo);
  require(lo < hi && f_lo < 0.0 && secular(hi) > 0.0, ErrorKind::numerical_failure,
          "secular equation has no sign change on (0, phi_min)");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = secular(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double search_a(int k, int l, int n) {
  const double kt = 2.0 * kPi * k / n;
  const double lt = 2.0 * kPi * l / n;
  return 0.75 * (1.0 / 3.0 - std::cos(kt) - std::cos(lt) - std::cos(kt - lt));
}

namespace {

double inverse_gap_sum(int n, int range) {
  double sum = 0.0;
  for (int k = 0; k < range; ++k) {
    for (int l = 0; l < range; ++l) {
      if (k == 0 && l == 0) continue;
      sum += 1.0 / (2.0 + search_a(k, l, n));
    }
  }
  return sum / (static_cast<double>(n) * n);
}

}  // namespace

double c_squared(int n) {
  require_search_size(n, 4);
  return inverse_gap_sum(n, n);
}

double c_constant(int n) { return std::sqrt(c_squared(n)); }

double s_sum(int n) {
  require_search_size(n, 4);
  double sum = 0.0;
  for (int k = 0; k < n / 2; ++k) {
    for (int l = 0; l < n / 2; ++l) {
      if (k == 0 && l == 0) continue;
      sum += 1.0 / (static_cast<double>(k) * k + static_cast<double>(l) * l);
    }
  }
  return sum;
}

bool BoundChainReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

BoundChainReport verify_bound_chain(int n) {
  require_search_size(n, 8);
  BoundChainReport r;
  r.n = n;
  r.c_squared = c_squared(n);
  r.half_range = inverse_gap_sum(n, n / 2);
  for (int k = 0; k < n / 2; ++k) {
    for (int l = 0; l < n / 2; ++l) {
      if (k == 0 && l == 0) continue;
      r.hex_sum += 1.0 / (static_cast<double>(k) * k - static_cast<double>(k) * l +
                          static_cast<double>(l) * l);
    }
  }
  r.s = s_sum(n);

  const double pi2 = kPi * kPi;
  auto check = [&](std::string name, double lower, double upper) {
    r.checks.push_back({std::move(name), lower, upper, lower <= upper});
  };
  // The restricted sum is squeezed between the full sum and a quarter of it.
  check("half_range <= C^2", r.half_range, r.c_squared);
  check("C^2 <= 4 half_range", r.c_squared, 4.0 * r.half_range);
  // Cosine bounds 1 - 2pi^2k^2/n^2 <= cos(2pi k/n) <= 1 - 8k^2/n^2, k < n/2.
  for (int k = 0; k < n / 2; ++k) {
    const double c = std::cos(2.0 * kPi * k / n);
    const double k2 = static_cast<double>(k) * k / (static_cast<double>(n) * n);
    if (!(1.0 - 2.0 * pi2 * k2 <= c + 1e-15 && c <= 1.0 - 8.0 * k2 + 1e-15)) {
      check("cosine bounds at k=" + std::to_string(k), 1.0, 0.0);
    }
  }
  check("hex_sum/(3pi^2) <= half_range", r.hex_sum / (3.0 * pi2), r.half_range);
  check("half_range <= hex_sum/12", r.half_range, r.hex_sum / 12.0);
  check("S <= hex_sum", r.s, r.hex_sum);
  check("hex_sum <= 2 S", r.hex_sum, 2.0 * r.s);
  check("S/(3pi^2) <= half_range", r.s / (3.0 * pi2), r.half_range);
  check("half_range <= S/6", r.half_range, r.s / 6.0);
  check("S/(3pi^2) <= C^2", r.s / (3.0 * pi2), r.c_squared);
  return r;
}

Prediction predict(int n, double lambda) {
  return {lambda, kPi / (2.0 * lambda), static_cast<double>(n) * n * lambda * lambda / 8.0};
}

Prediction predicted_runtime_and_probability(int n) { return predict(n, lambda_exact(n)); }

double sinusoid_correlation(const std::vector<double>& p_marked, double lambda, long t_end) {
  const auto count = std::min<std::size_t>(p_marked.size(), static_cast<std::size_t>(t_end) + 1);
  require(count >= 3, ErrorKind::invalid_parameter, "correlation needs at least three samples");
  double mx = 0.0, my = 0.0;
  std::vector<double> model(count);
  for (std::size_t t = 0; t < count; ++t) {
    const double s = std::sin(lambda * static_cast<double>(t));
    model[t] = s * s;
    mx += p_marked[t];
    my += model[t];
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    sxy += (p_marked[t] - mx) * (model[t] - my);
    sxx += (p_marked[t] - mx) * (p_marked[t] - mx);
    syy += (model[t] - my) * (model[t] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

Eigen::MatrixXcd dense_search_operator(const HexLattice& lattice, double theta,
                                       const VertexLabel& marked) {
  Eigen::MatrixXcd w = -dense::evolution_matrix(WalkAngles::uniform(theta), lattice);
  w.col(static_cast<Eigen::Index>(lattice.index(marked))) *= -1.0;
  return w;
}

OverlapReport overlap_checks(int n) {
  require(n >= 4 && n <= 16 && n % 2 == 0, ErrorKind::invalid_parameter,
          "overlap checks need an even n in [4, 16]");
  const HexLattice lattice(n);
  const VertexLabel marked{0, 0, 0};
  const auto m = static_cast<Eigen::Index>(lattice.index(marked));
  const Eigen::MatrixXcd w = dense_search_operator(lattice, kSearchTheta, marked);
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(w);
  require(solver.info() == Eigen::Success, ErrorKind::numerical_failure,
          "complex eigensolver failed");

  OverlapReport r;
  r.lambda = lambda_exact(n);
  const Eigen::VectorXcd psi0 = dense::to_eigen(uniform_state(lattice));

  auto pick = [&](Complex target, Complex& eigenvalue, double& residual, Complex& marked_amp,
                  Complex& overlap) {
    Eigen::Index best = 0;
    (solver.eigenvalues().array() - target).abs().minCoeff(&best);
    eigenvalue = solver.eigenvalues()(best);
    Eigen::VectorXcd v = solver.eigenvectors().col(best).normalized();
    const Complex at_marked = v(m);
    v *= std::polar(1.0, -std::arg(at_marked));
    residual = (w * v - target * v).norm();
    marked_amp = v(m);
    overlap = v.dot(psi0);  // conjugates v
  };
  pick(std::polar(1.0, r.lambda), r.eigenvalue_plus, r.residual_plus, r.marked_plus, r.overlap_plus);
  pick(std::polar(1.0, -r.lambda), r.eigenvalue_minus, r.residual_minus, r.marked_minus,
       r.overlap_minus);
  r.marked_ratio = r.marked_plus.real() / (n * r.lambda / (2.0 * std::sqrt(2.0)));
  r.half_sum = std::norm(r.overlap_plus) + std::norm(r.overlap_minus);
  return r;
}

}  // namespace hexwalk
