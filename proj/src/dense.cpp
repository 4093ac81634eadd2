#include "hexwalk/dense.hpp"

#include <cmath>
#include <string>

#include "hexwalk/error.hpp"

namespace hexwalk::dense {

namespace {

void require_small(const HexLattice& lattice) {
  require(lattice.size() <= kMaxDimension, ErrorKind::invalid_parameter,
          "dense operators limited to N <= " + std::to_string(kMaxDimension) + ", got N = " +
              std::to_string(lattice.size()));
}

}  // namespace

Eigen::MatrixXcd hamiltonian(const HexLattice& lattice, Color color) {
  require_small(lattice);
  const auto dim = static_cast<Eigen::Index>(lattice.size());
  Eigen::MatrixXcd h = -Eigen::MatrixXcd::Identity(dim, dim);
  const double amp = 1.0 / std::sqrt(2.0);
  for (const auto& cell : lattice.tessellation(color)) {
    Eigen::VectorXcd eta = Eigen::VectorXcd::Zero(dim);
    eta(static_cast<Eigen::Index>(lattice.index(cell.full))) = amp;
    eta(static_cast<Eigen::Index>(lattice.index(cell.empty))) = amp;
    h += 2.0 * eta * eta.adjoint();
  }
  return h;
}

Eigen::MatrixXcd local_unitary(const HexLattice& lattice, Color color, double theta) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian(lattice, color));
  require(solver.info() == Eigen::Success, ErrorKind::numerical_failure,
          "Hermitian eigensolver failed");
  const Eigen::VectorXcd phases =
      (Complex(0.0, theta) * solver.eigenvalues().cast<Complex>()).array().exp();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::MatrixXcd evolution_matrix(const WalkAngles& angles, const HexLattice& lattice) {
  require_small(lattice);
  return local_unitary(lattice, Color::blue, angles.blue) *
         local_unitary(lattice, Color::green, angles.green) *
         local_unitary(lattice, Color::red, angles.red);
}

Eigen::VectorXcd to_eigen(const StateVector& state) {
  return Eigen::Map<const Eigen::VectorXcd>(state.data(), static_cast<Eigen::Index>(state.size()));
}

StateVector from_eigen(const Eigen::VectorXcd& v) { return StateVector(v.data(), v.data() + v.size()); }

}  // namespace hexwalk::dense
