#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "hexwalk/evolution.hpp"
#include "hexwalk/lattice.hpp"

namespace hexwalk {

/// Restriction of U to the momentum-(k,l) plane spanned by the two
/// sublattice Fourier modes |psi^0_kl>, |psi^1_kl>. In that basis
///
///     U_kl = [  A    B  ]
///            [ -B*   A* ]
struct FourierBlock {
  int k = 0;
  int l = 0;
  double k_angle = 0.0;  // 2 pi k / n
  double l_angle = 0.0;  // 2 pi l / n
  double f = 0.0;
  double g = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  Complex A;
  Complex B;

  /// U_kl applied to a spinor (coefficients on |psi^0_kl>, |psi^1_kl>).
  std::array<Complex, 2> apply(const std::array<Complex, 2>& spinor) const noexcept;
};

FourierBlock fourier_block(int k, int l, double theta, int n);

/// Same block at continuous momenta (k, l) in radians.
FourierBlock fourier_block_at(double k_angle, double l_angle, double theta);

/// Eigenpairs e^{+i phase} v_plus and e^{-i phase} v_minus of U_kl, with
/// phase in [0, pi] and cos(phase) = a cos(theta).
struct BlockEigensystem {
  double phase = 0.0;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  std::array<Complex, 2> v_plus;
  std::array<Complex, 2> v_minus;
};

/// Blocks with |B| below this are treated as diagonal.
inline constexpr double kDegenerateTolerance = 1e-9;

BlockEigensystem block_eigensystem(const FourierBlock& block, double theta);

/// All n^2 blocks and eigensystems for one theta, indexed l*n + k (the same
/// order as SpinorField).
class SublatticeSpectrum {
 public:
  SublatticeSpectrum(int n, double theta);

  int n() const noexcept { return n_; }
  double theta() const noexcept { return theta_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  const FourierBlock& block(int k, int l) const { return blocks_[offset(k, l)]; }
  const BlockEigensystem& eigensystem(int k, int l) const { return eigen_[offset(k, l)]; }
  const FourierBlock& block(std::size_t i) const { return blocks_[i]; }
  const BlockEigensystem& eigensystem(std::size_t i) const { return eigen_[i]; }

 private:
  std::size_t offset(int k, int l) const;

  int n_;
  double theta_;
  std::vector<FourierBlock> blocks_;
  std::vector<BlockEigensystem> eigen_;
};

/// Per-momentum spinors (<psi^0_kl|state>, <psi^1_kl|state>), stored as two
/// n x n arrays indexed l*n + k.
struct SpinorField {
  int n = 0;
  std::vector<Complex> upper;
  std::vector<Complex> lower;

  std::array<Complex, 2> at(int k, int l) const;
  double squared_norm() const;
};

/// Two 2-D FFTs, one per sublattice, with the 1/n normalisation of the
/// sublattice Fourier modes. Owns FFTW plans; not copyable.
class FourierTransform {
 public:
  explicit FourierTransform(int n);
  ~FourierTransform();
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  int n() const noexcept;
  SpinorField forward(std::span<const Complex> state) const;
  StateVector inverse(const SpinorField& spinors) const;

 private:
  struct Plans;
  std::unique_ptr<Plans> plans_;
};

SpinorField forward_transform(const StateVector& state, const HexLattice& lattice);
StateVector inverse_transform(const SpinorField& spinors, const HexLattice& lattice);

/// U^t |initial> for arbitrary t at O(N log N) cost, by expanding the initial
/// state once in the eigenbasis of every block.
class SpectralPropagator {
 public:
  SpectralPropagator(const HexLattice& lattice, double theta, const StateVector& initial);

  const SublatticeSpectrum& spectrum() const noexcept { return spectrum_; }

  /// <psi^{+phase}_kl | initial> and <psi^{-phase}_kl | initial>, indexed l*n + k.
  std::span<const Complex> plus_overlaps() const noexcept { return plus_; }
  std::span<const Complex> minus_overlaps() const noexcept { return minus_; }

  SpinorField spinors_at(long t) const;
  StateVector state_at(long t) const;

 private:
  HexLattice lattice_;
  SublatticeSpectrum spectrum_;
  FourierTransform transform_;
  std::vector<Complex> plus_;
  std::vector<Complex> minus_;
};

/// Requires uniform angles; throws unsupported_configuration otherwise.
StateVector spectral_evolve(const StateVector& state, long t, const WalkAngles& angles,
                            const HexLattice& lattice);

/// Smallest positive eigen-argument of (-U) and the block attaining it.
struct PhaseGap {
  double value = 0.0;
  int k = 0;
  int l = 0;
};

PhaseGap phi_min(int n, double theta);

/// Two-term large-n expansion of cos(phase_kl).
double cos_phi_asymptotic(int k, int l, double theta, int n);

}  // namespace hexwalk
