#include "hexwalk/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "hexwalk/error.hpp"

namespace hexwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

std::array<Complex, 2> normalized(const std::array<Complex, 2>& v) {
  const double len = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / len, v[1] / len};
}

}  // namespace

std::array<Complex, 2> FourierBlock::apply(const std::array<Complex, 2>& s) const noexcept {
  return {A * s[0] + B * s[1], -std::conj(B) * s[0] + std::conj(A) * s[1]};
}

FourierBlock fourier_block_at(double k_angle, double l_angle, double theta) {
  FourierBlock blk;
  blk.k_angle = k_angle;
  blk.l_angle = l_angle;
  const double sin2 = std::sin(theta) * std::sin(theta);
  const double cos2 = std::cos(theta) * std::cos(theta);
  blk.f = std::cos(k_angle) + std::cos(l_angle) + std::cos(k_angle - l_angle);
  blk.g = std::sin(k_angle) + std::sin(l_angle) + std::sin(k_angle - l_angle);
  blk.a = -blk.f * sin2 + cos2;
  blk.b = -blk.g * sin2;
  blk.c = blk.b + std::sin(k_angle) + std::sin(l_angle);
  blk.d = blk.a + std::cos(k_angle) + std::cos(l_angle);
  blk.A = Complex(blk.a, blk.b) * std::cos(theta);
  blk.B = Complex(blk.c, blk.d) * std::sin(theta);
  return blk;
}

FourierBlock fourier_block(int k, int l, double theta, int n) {
  require(n > 0 && k >= 0 && k < n && l >= 0 && l < n, ErrorKind::invalid_parameter,
          "momentum indices must lie in [0, n)");
  FourierBlock blk = fourier_block_at(kTwoPi * k / n, kTwoPi * l / n, theta);
  blk.k = k;
  blk.l = l;
  return blk;
}

BlockEigensystem block_eigensystem(const FourierBlock& block, double theta) {
  BlockEigensystem es;
  const double cos_theta = std::cos(theta);
  const double cos_phase = std::clamp(block.a * cos_theta, -1.0, 1.0);
  es.phase = std::acos(cos_phase);
  const double sin_phase = std::sin(es.phase);
  es.gamma_plus = 2.0 - 2.0 * (block.a * cos_phase + block.b * sin_phase) * cos_theta;
  es.gamma_minus = 2.0 - 2.0 * (block.a * cos_phase - block.b * sin_phase) * cos_theta;

  const Complex plus = std::polar(1.0, es.phase);
  const Complex minus = std::conj(plus);

  if (std::abs(block.B) < kDegenerateTolerance) {
    // Diagonal block diag(A, A*): the general eigenvector formula degenerates to 0/0.
    const double r = 1.0 / std::sqrt(2.0);
    if (es.gamma_plus < kDegenerateTolerance && es.gamma_minus < kDegenerateTolerance) {
      es.v_plus = {r, r};
      es.v_minus = {r, -r};
    } else if (block.A.imag() >= 0.0) {
      es.v_plus = {1.0, 0.0};
      es.v_minus = {0.0, 1.0};
    } else {
      es.v_plus = {0.0, 1.0};
      es.v_minus = {1.0, 0.0};
    }
    return es;
  }

  // Null vector of (U_kl - mu I) from the first row, falling back to the
  // second row when the first is nearly zero.
  auto eigenvector = [&](Complex mu, double gamma) -> std::array<Complex, 2> {
    if (gamma > kDegenerateTolerance) {
      const double s = 1.0 / std::sqrt(gamma);
      return {block.B * s, (mu - block.A) * s};
    }
    return normalized({std::conj(block.A) - mu, std::conj(block.B)});
  };
  es.v_plus = eigenvector(plus, es.gamma_plus);
  es.v_minus = eigenvector(minus, es.gamma_minus);
  return es;
}

SublatticeSpectrum::SublatticeSpectrum(int n, double theta) : n_(n), theta_(theta) {
  require(n > 0, ErrorKind::invalid_parameter, "spectrum needs n > 0");
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  blocks_.reserve(count);
  eigen_.reserve(count);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      blocks_.push_back(fourier_block(k, l, theta, n));
      eigen_.push_back(block_eigensystem(blocks_.back(), theta));
    }
  }
}

std::size_t SublatticeSpectrum::offset(int k, int l) const {
  require(k >= 0 && k < n_ && l >= 0 && l < n_, ErrorKind::invalid_parameter,
          "momentum indices must lie in [0, n)");
  return static_cast<std::size_t>(l) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
}

std::array<Complex, 2> SpinorField::at(int k, int l) const {
  const auto i = static_cast<std::size_t>(l) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k);
  return {upper.at(i), lower.at(i)};
}

double SpinorField::squared_norm() const {
  double sum = 0.0;
  for (const auto& z : upper) sum += std::norm(z);
  for (const auto& z : lower) sum += std::norm(z);
  return sum;
}

struct FourierTransform::Plans {
  int n = 0;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

FourierTransform::FourierTransform(int n) : plans_(std::make_unique<Plans>()) {
  require(n > 0, ErrorKind::invalid_parameter, "transform size must be positive");
  plans_->n = n;
  // FFTW_ESTIMATE keeps plan selection, and hence rounding, reproducible.
  std::vector<Complex> scratch(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard lock(planner_mutex());
  plans_->forward = fftw_plan_dft_2d(n, n, as_fftw(scratch.data()), as_fftw(scratch.data()),
                                     FFTW_FORWARD, flags);
  plans_->backward = fftw_plan_dft_2d(n, n, as_fftw(scratch.data()), as_fftw(scratch.data()),
                                      FFTW_BACKWARD, flags);
  require(plans_->forward && plans_->backward, ErrorKind::numerical_failure,
          "FFTW planning failed");
}

FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept = default;

int FourierTransform::n() const noexcept { return plans_->n; }

SpinorField FourierTransform::forward(std::span<const Complex> state) const {
  const int n = plans_->n;
  const auto per = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  require(state.size() == 2 * per, ErrorKind::dimension_mismatch,
          "forward transform: state size does not match 2n^2");
  SpinorField out{n, std::vector<Complex>(state.begin(), state.begin() + per),
                  std::vector<Complex>(state.begin() + per, state.end())};
  fftw_execute_dft(plans_->forward, as_fftw(out.upper.data()), as_fftw(out.upper.data()));
  fftw_execute_dft(plans_->forward, as_fftw(out.lower.data()), as_fftw(out.lower.data()));
  const double scale = 1.0 / n;
  for (auto& z : out.upper) z *= scale;
  for (auto& z : out.lower) z *= scale;
  return out;
}

StateVector FourierTransform::inverse(const SpinorField& spinors) const {
  const int n = plans_->n;
  const auto per = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  require(spinors.n == n && spinors.upper.size() == per && spinors.lower.size() == per,
          ErrorKind::dimension_mismatch, "inverse transform: spinor field size mismatch");
  StateVector out(2 * per);
  std::copy(spinors.upper.begin(), spinors.upper.end(), out.begin());
  std::copy(spinors.lower.begin(), spinors.lower.end(), out.begin() + static_cast<std::ptrdiff_t>(per));
  fftw_execute_dft(plans_->backward, as_fftw(out.data()), as_fftw(out.data()));
  fftw_execute_dft(plans_->backward, as_fftw(out.data() + per), as_fftw(out.data() + per));
  const double scale = 1.0 / n;
  for (auto& z : out) z *= scale;
  return out;
}

SpinorField forward_transform(const StateVector& state, const HexLattice& lattice) {
  require_dimension(state, lattice);
  return FourierTransform(lattice.n()).forward(state);
}

StateVector inverse_transform(const SpinorField& spinors, const HexLattice& lattice) {
  return FourierTransform(lattice.n()).inverse(spinors);
}

SpectralPropagator::SpectralPropagator(const HexLattice& lattice, double theta,
                                       const StateVector& initial)
    : lattice_(lattice), spectrum_(lattice.n(), theta), transform_(lattice.n()) {
  require_dimension(initial, lattice);
  const SpinorField s = transform_.forward(initial);
  plus_.resize(spectrum_.size());
  minus_.resize(spectrum_.size());
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    const auto& es = spectrum_.eigensystem(i);
    plus_[i] = std::conj(es.v_plus[0]) * s.upper[i] + std::conj(es.v_plus[1]) * s.lower[i];
    minus_[i] = std::conj(es.v_minus[0]) * s.upper[i] + std::conj(es.v_minus[1]) * s.lower[i];
  }
}

SpinorField SpectralPropagator::spinors_at(long t) const {
  require(t >= 0, ErrorKind::invalid_parameter, "time must be nonnegative");
  const int n = lattice_.n();
  SpinorField out{n, std::vector<Complex>(spectrum_.size()), std::vector<Complex>(spectrum_.size())};
  const double td = static_cast<double>(t);
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    const auto& es = spectrum_.eigensystem(i);
    const Complex rot = std::polar(1.0, td * es.phase);
    const Complex cp = plus_[i] * rot;
    const Complex cm = minus_[i] * std::conj(rot);
    out.upper[i] = cp * es.v_plus[0] + cm * es.v_minus[0];
    out.lower[i] = cp * es.v_plus[1] + cm * es.v_minus[1];
  }
  return out;
}

StateVector SpectralPropagator::state_at(long t) const { return transform_.inverse(spinors_at(t)); }

StateVector spectral_evolve(const StateVector& state, long t, const WalkAngles& angles,
                            const HexLattice& lattice) {
  require(angles.is_uniform(), ErrorKind::unsupported_configuration,
          "spectral evolution requires equal angles on all three tessellations");
  return SpectralPropagator(lattice, angles.red, state).state_at(t);
}

PhaseGap phi_min(int n, double theta) {
  require(n >= 2 && n % 2 == 0, ErrorKind::invalid_parameter, "phi_min needs even n >= 2");
  constexpr double kZero = 1e-12;
  PhaseGap best{std::numeric_limits<double>::infinity(), 0, 0};
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      const double phase = block_eigensystem(fourier_block(k, l, theta, n), theta).phase;
      // Eigenvalues of -U are e^{i(pi + phase)} and e^{i(pi - phase)}.
      for (const double arg : {std::fmod(std::numbers::pi + phase, kTwoPi), std::numbers::pi - phase}) {
        if (arg > kZero && arg < best.value) best = {arg, k, l};
      }
    }
  }
  return best;
}

double cos_phi_asymptotic(int k, int l, double theta, int n) {
  const double c = std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double q = static_cast<double>(k) * k - static_cast<double>(k) * l + static_cast<double>(l) * l;
  return (4.0 * c * c - 3.0) * c + 4.0 * pi2 * q * s2 * c / (static_cast<double>(n) * n);
}

}  // namespace hexwalk
