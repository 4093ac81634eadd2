#include "hexwalk/evolution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hexwalk/error.hpp"

namespace hexwalk {

double WalkAngles::operator[](Color color) const noexcept {
  switch (color) {
    case Color::red: return red;
    case Color::green: return green;
    case Color::blue: return blue;
  }
  return 0.0;
}

void require_dimension(const StateVector& state, const HexLattice& lattice) {
  require(state.size() == lattice.size(), ErrorKind::dimension_mismatch,
          "state has " + std::to_string(state.size()) + " amplitudes, lattice has " +
              std::to_string(lattice.size()) + " vertices");
}

TessellationHamiltonian::TessellationHamiltonian(const HexLattice& lattice, Color color)
    : color_(color), dimension_(lattice.size()) {
  const auto cells = lattice.tessellation(color);
  pairs_.reserve(cells.size());
  for (const auto& cell : cells) {
    pairs_.emplace_back(static_cast<std::uint32_t>(lattice.index(cell.full)),
                        static_cast<std::uint32_t>(lattice.index(cell.empty)));
  }
}

StateVector TessellationHamiltonian::apply(const StateVector& state) const {
  require(state.size() == dimension_, ErrorKind::dimension_mismatch,
          "Hamiltonian applied to state of wrong dimension");
  StateVector out(state.size());
  for (const auto& [u, v] : pairs_) {
    out[u] = state[v];
    out[v] = state[u];
  }
  return out;
}

void TessellationHamiltonian::apply_exponential_inplace(std::span<Complex> state,
                                                        double theta) const {
  require(state.size() == dimension_, ErrorKind::dimension_mismatch,
          "local unitary applied to state of wrong dimension");
  const double c = std::cos(theta);
  const Complex is{0.0, std::sin(theta)};
  for (const auto& [u, v] : pairs_) {
    const Complex a = state[u];
    const Complex b = state[v];
    state[u] = c * a + is * b;
    state[v] = c * b + is * a;
  }
}

Walk::Walk(const HexLattice& lattice, WalkAngles angles)
    : angles_(angles),
      hamiltonians_{TessellationHamiltonian(lattice, Color::red),
                    TessellationHamiltonian(lattice, Color::green),
                    TessellationHamiltonian(lattice, Color::blue)} {}

void Walk::step_inplace(std::span<Complex> state) const {
  // Rightmost factor of U acts first.
  for (const Color color : kColors) {
    hamiltonian(color).apply_exponential_inplace(state, angles_[color]);
  }
}

StateVector Walk::step(const StateVector& state) const {
  StateVector out = state;
  step_inplace(out);
  return out;
}

StateVector Walk::evolve(StateVector state, long steps) const {
  require(steps >= 0, ErrorKind::invalid_parameter, "number of steps must be nonnegative");
  for (long t = 0; t < steps; ++t) step_inplace(state);
  return state;
}

StateVector apply_local_unitary(const StateVector& state,
                                const TessellationHamiltonian& hamiltonian, double theta) {
  StateVector out = state;
  hamiltonian.apply_exponential_inplace(out, theta);
  return out;
}

StateVector step(const StateVector& state, const WalkAngles& angles, const HexLattice& lattice) {
  require_dimension(state, lattice);
  return Walk(lattice, angles).step(state);
}

StateVector evolve(const StateVector& state, long steps, const WalkAngles& angles,
                   const HexLattice& lattice) {
  require_dimension(state, lattice);
  return Walk(lattice, angles).evolve(state, steps);
}

std::vector<double> probability_distribution(const StateVector& state) {
  std::vector<double> p(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) p[i] = std::norm(state[i]);
  return p;
}

double norm(std::span<const Complex> state) {
  double sum = 0.0;
  for (const auto& a : state) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector basis_state(const HexLattice& lattice, const VertexLabel& v) {
  StateVector state(lattice.size());
  state[lattice.index(v)] = 1.0;
  return state;
}

StateVector random_state(std::size_t dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector state(dimension);
  for (auto& a : state) {
    const double re = gauss(rng);
    a = Complex(re, gauss(rng));
  }
  const double len = norm(state);
  for (auto& a : state) a /= len;
  return state;
}

}  // namespace hexwalk
