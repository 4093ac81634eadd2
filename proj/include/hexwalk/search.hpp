#pragma once

#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hexwalk/evolution.hpp"
#include "hexwalk/lattice.hpp"

namespace hexwalk {

/// The only angle with a vanishing phase gap, hence a fast search.
inline constexpr double kSearchTheta = std::numbers::pi / 3.0;

struct SearchConfig {
  int n = 16;
  VertexLabel marked{0, 0, 0};
  double theta = kSearchTheta;
  long t_max = 0;
};

/// 1/(sqrt2 n) on every vertex.
StateVector uniform_state(const HexLattice& lattice);

/// U R0 |state>: flip the marked amplitude, then one walk step.
StateVector search_step(const StateVector& state, const SearchConfig& config,
                        const HexLattice& lattice);

struct SearchRun {
  std::vector<double> p_marked;  // t = 0..t_max
  long t_sim = 0;
  double p_sim = 0.0;
  bool peak_found = false;  // false: t_max too short, series is partial
};

/// Repeats U R0 from the uniform state. The peak is located on the two-step
/// moving average of p_marked, which removes the period-2 sublattice wobble;
/// t_sim is the larger raw sample of that pair.
SearchRun run_search(const SearchConfig& config, const HexLattice& lattice);

/// F(lambda) = sum_{kl,+-} |<0|v^{+-}_kl>|^2 tan((lambda +- phase_kl)/2), whose
/// roots are eigen-arguments of -U R0. Blocks at phase = pi (the (0,0) block
/// at theta = pi/3) are folded into a closed-form -cot(lambda/2) term.
class SecularEquation {
 public:
  SecularEquation(int n, double theta);

  double operator()(double lambda) const;

  /// (1e-10, phi_min - 1e-10): F is increasing between its poles and the
  /// first positive pole sits at or above phi_min.
  double bracket_low() const noexcept { return low_; }
  double bracket_high() const noexcept { return high_; }

 private:
  struct Term {
    double phase;
    double w_plus;
    double w_minus;
  };
  std::vector<Term> terms_;
  double pole_weight_ = 0.0;
  double low_ = 0.0;
  double high_ = 0.0;
};

/// Eigen-argument lambda of the search walk closest to zero, from the exact
/// secular equation over all Fourier blocks, by bisection on (1e-10, phi_min - 1e-10).
/// The eigenvalues e^{+-i lambda} belong to -U R0 (the search walk up to the
/// global phase -1).
double lambda_exact(int n, double theta = kSearchTheta);

/// a_kl at theta = pi/3 in the reduced form (3/4)(1/3 - cos k~ - cos l~ - cos(k~ - l~)).
double search_a(int k, int l, int n);

/// (1/n^2) sum over (k,l) != (0,0) of 1/(2 + a_kl), full range 0 <= k,l < n.
double c_squared(int n);
double c_constant(int n);

/// sum over 0 <= k,l < n/2, (k,l) != (0,0) of 1/(k^2 + l^2).
double s_sum(int n);

struct BoundCheck {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
  bool holds = false;
};

/// Every inequality of the C^2 <-> S(n) chain, evaluated numerically.
struct BoundChainReport {
  int n = 0;
  double c_squared = 0.0;         // full-range sum
  double half_range = 0.0;        // same sum restricted to k,l < n/2
  double hex_sum = 0.0;           // sum of 1/(k^2 - kl + l^2), k,l < n/2
  double s = 0.0;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

BoundChainReport verify_bound_chain(int n);

struct Prediction {
  double lambda = 0.0;
  double t_pred = 0.0;  // pi / (2 lambda)
  double p_pred = 0.0;  // n^2 lambda^2 / 8
};

Prediction predict(int n, double lambda);
Prediction predicted_runtime_and_probability(int n);

/// Pearson correlation of p_marked(t) with sin^2(lambda t) over t in [0, t_end].
double sinusoid_correlation(const std::vector<double>& p_marked, double lambda, long t_end);

/// -U R0 as a dense matrix.
Eigen::MatrixXcd dense_search_operator(const HexLattice& lattice, double theta,
                                       const VertexLabel& marked);

struct OverlapReport {
  double lambda = 0.0;
  Complex eigenvalue_plus;   // dense eigenvalue nearest e^{+i lambda}
  Complex eigenvalue_minus;  // dense eigenvalue nearest e^{-i lambda}
  double residual_plus = 0.0;   // || W|l> - e^{i lambda}|l> ||
  double residual_minus = 0.0;
  Complex marked_plus;       // <000|lambda>, phase fixed real positive
  Complex marked_minus;
  double marked_ratio = 0.0;  // <000|lambda> / (n lambda / (2 sqrt2))
  Complex overlap_plus;      // <lambda|psi0>
  Complex overlap_minus;     // <lambda^-|psi0>
  double half_sum = 0.0;     // |<lambda|psi0>|^2 + |<lambda^-|psi0>|^2
};

/// Dense eigensolve of the n <= 16 search walk and the overlaps used in the
/// two-level reduction of the search dynamics.
OverlapReport overlap_checks(int n);

}  // namespace hexwalk
