#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "hexwalk/lattice.hpp"

namespace hexwalk {

using Complex = std::complex<double>;

/// Amplitudes indexed by HexLattice::index.
using StateVector = std::vector<Complex>;

/// Per-tessellation angles of U = exp(i th_blue H2) exp(i th_green H1) exp(i th_red H0).
struct WalkAngles {
  double red = 0.0;
  double green = 0.0;
  double blue = 0.0;

  static WalkAngles uniform(double theta) noexcept { return {theta, theta, theta}; }

  double operator[](Color color) const noexcept;
  bool is_uniform() const noexcept { return red == green && green == blue; }
};

/// Reflection H = 2 sum |eta><eta| - I of one tessellation. Since every cell
/// has two sites, H just swaps the amplitudes within each cell.
class TessellationHamiltonian {
 public:
  TessellationHamiltonian(const HexLattice& lattice, Color color);

  Color color() const noexcept { return color_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs() const noexcept {
    return pairs_;
  }

  /// H * state.
  StateVector apply(const StateVector& state) const;

  /// state <- exp(i theta H) state = cos(theta) state + i sin(theta) H state.
  void apply_exponential_inplace(std::span<Complex> state, double theta) const;

 private:
  Color color_;
  std::size_t dimension_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

/// Precomputed one-step operator for a fixed lattice and angles.
class Walk {
 public:
  Walk(const HexLattice& lattice, WalkAngles angles);

  const WalkAngles& angles() const noexcept { return angles_; }
  std::size_t dimension() const noexcept { return hamiltonians_[0].dimension(); }
  const TessellationHamiltonian& hamiltonian(Color color) const noexcept {
    return hamiltonians_[static_cast<int>(color)];
  }

  void step_inplace(std::span<Complex> state) const;
  StateVector step(const StateVector& state) const;
  StateVector evolve(StateVector state, long steps) const;

 private:
  WalkAngles angles_;
  std::array<TessellationHamiltonian, 3> hamiltonians_;
};

StateVector apply_local_unitary(const StateVector& state,
                                const TessellationHamiltonian& hamiltonian, double theta);
StateVector step(const StateVector& state, const WalkAngles& angles, const HexLattice& lattice);
StateVector evolve(const StateVector& state, long steps, const WalkAngles& angles,
                   const HexLattice& lattice);

std::vector<double> probability_distribution(const StateVector& state);
double norm(std::span<const Complex> state);
StateVector basis_state(const HexLattice& lattice, const VertexLabel& v);

/// Haar-like random unit state (complex Gaussian components, normalised).
StateVector random_state(std::size_t dimension, std::mt19937_64& rng);

void require_dimension(const StateVector& state, const HexLattice& lattice);

}  // namespace hexwalk
