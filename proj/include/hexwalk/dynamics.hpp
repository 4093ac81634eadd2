#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexwalk/evolution.hpp"
#include "hexwalk/lattice.hpp"

namespace hexwalk {

/// Canonical starting states. Terms are given relative to a placement
/// origin; `prepare` shifts them onto the lattice.
struct InitialState {
  enum class Kind { two_node, hexagon, single_node, custom };

  Kind kind = Kind::hexagon;
  std::vector<std::pair<VertexLabel, Complex>> terms;

  /// (|1,1,0> + |1,0,1>)/sqrt2
  static InitialState two_node();
  /// Uniform over the six vertices of the hexagon spanned by (0,0)..(1,1).
  static InitialState hexagon();
  static InitialState single_node(VertexLabel v = {0, 0, 0});
  /// Throws invalid_parameter unless the amplitudes have unit norm.
  static InitialState custom(std::vector<std::pair<VertexLabel, Complex>> terms);

  /// Accepts "two-node", "hexagon" and "single-node".
  static InitialState from_name(std::string_view name);
  std::string name() const;

  StateVector prepare(const HexLattice& lattice, VertexLabel origin) const;
  StateVector prepare_centered(const HexLattice& lattice) const;
};

/// Origin used for position statistics: the middle of the torus, so that a
/// packet can spread n/2 - 1 steps in every direction before it wraps.
VertexLabel centered_origin(const HexLattice& lattice) noexcept;

/// Largest t for which U^t of the centred initial state never touches a
/// wrapped coordinate. Each step moves x and y by at most one.
long max_unwrapped_steps(const InitialState& init, const HexLattice& lattice);

/// Smallest even n for which max_unwrapped_steps(init, n) >= steps.
int lattice_size_for(const InitialState& init, long steps);

/// Total 2-D standard deviation of the position, in edge lengths.
double std_deviation(const StateVector& state, const HexLattice& lattice);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct SigmaSeries {
  double theta = 0.0;
  std::vector<long> t;
  std::vector<double> sigma;
  LinearFit fit;
  long fit_begin = 0;
  long fit_end = 0;
};

/// sigma(t) for t = 0..t_max with a linear fit over [t_max/5, t_max].
SigmaSeries sigma_series(const InitialState& init, double theta, long t_max,
                         const HexLattice& lattice);

struct SweepPoint {
  double theta = 0.0;
  double sigma_over_t = 0.0;
};

std::vector<SweepPoint> theta_sweep(const InitialState& init, long t_probe,
                                    std::span<const double> thetas, const HexLattice& lattice);

/// `count` equally spaced points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, int count);

}  // namespace hexwalk
