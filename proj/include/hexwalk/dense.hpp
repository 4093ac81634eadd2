#pragma once

// Brute-force dense operators, used as oracles for the sparse and spectral
// paths. Everything here is O(N^2) memory or worse.

#include <Eigen/Dense>

#include "hexwalk/evolution.hpp"
#include "hexwalk/lattice.hpp"

namespace hexwalk::dense {

inline constexpr std::size_t kMaxDimension = 4096;

/// H_j = 2 sum_xy |eta_xy><eta_xy| - I assembled from the cell vectors.
Eigen::MatrixXcd hamiltonian(const HexLattice& lattice, Color color);

/// exp(i theta H) through a Hermitian eigendecomposition of H.
Eigen::MatrixXcd local_unitary(const HexLattice& lattice, Color color, double theta);

/// U = exp(i th2 H2) exp(i th1 H1) exp(i th0 H0). Throws for N > kMaxDimension.
Eigen::MatrixXcd evolution_matrix(const WalkAngles& angles, const HexLattice& lattice);

Eigen::VectorXcd to_eigen(const StateVector& state);
StateVector from_eigen(const Eigen::VectorXcd& v);

}  // namespace hexwalk::dense
