#pragma once

#include <vector>

#include "hexwalk/dynamics.hpp"
#include "hexwalk/evolution.hpp"
#include "hexwalk/lattice.hpp"
#include "hexwalk/spectral.hpp"

namespace hexwalk {

/// phase(k, l) = arccos(a(k, l) cos theta) at continuous momenta.
double phase(double k, double l, double theta);

struct Gradient {
  double dk = 0.0;
  double dl = 0.0;
};

/// Analytic gradient of phase(k, l). Throws singular_point where
/// sin(phase) < 1e-9.
Gradient phase_gradient(double k, double l, double theta);

/// Gradient of cos(phase) = a cos(theta); smooth everywhere and zero exactly
/// at the stationary points of the phase.
Gradient cos_phase_gradient(double k, double l, double theta);

struct CriticalPoint {
  double k = 0.0;
  double l = 0.0;
  double equation_residual = 0.0;  // |sin k + sin(k-l)| + |sin l + sin(l-k)|
  double gradient_residual = 0.0;  // L1 norm of cos_phase_gradient
  double sin_phase = 0.0;
  double hessian_det = 0.0;        // finite differences of phase
};

/// All stationary points in [-pi, pi)^2, by Newton refinement from a dense
/// grid of seeds. theta must lie in (0, pi/2).
std::vector<CriticalPoint> find_critical_points(double theta);

/// The published closed form for det H, evaluated literally.
double hessian_det_formula(double k, double l, double theta);

/// det of the exact second-derivative matrix of phase(k, l).
double hessian_det_analytic(double k, double l, double theta);

/// det of the central-difference Hessian of phase(k, l).
double hessian_det_numeric(double k, double l, double theta, double h = 1e-4);

/// Spectral-sum amplitude <x,y,j|U^t|init> = (1/n) sum_kl (h+ e^{it phase} + h- e^{-it phase}).
class AmplitudeIntegrand {
 public:
  AmplitudeIntegrand(const HexLattice& lattice, double theta, const StateVector& initial);

  Complex amplitude(const VertexLabel& v, long t) const;
  const SpectralPropagator& propagator() const noexcept { return propagator_; }

 private:
  HexLattice lattice_;
  SpectralPropagator propagator_;
  std::vector<Complex> roots_;  // omega^m, m in [0, n)
};

Complex amplitude_at(const VertexLabel& v, const StateVector& initial, long t, double theta,
                     const HexLattice& lattice);

struct DecayFit {
  double exponent = 0.0;
  double r_squared = 0.0;
  VertexLabel vertex;  // absolute lattice label
  std::vector<long> t;
  std::vector<double> probability;
  std::vector<std::size_t> envelope;  // indices of local maxima used in the fit
};

/// Log-log slope of the local maxima of p_vertex(t) over [t_begin, t_end].
/// `vertex` is relative to the centred origin used by InitialState.
DecayFit decay_fit(const VertexLabel& vertex, const InitialState& init, double theta,
                   long t_begin, long t_end, const HexLattice& lattice);

struct PeakSample {
  long t = 0;
  double max_probability = 0.0;
};

/// max_v p_v(t) for each requested t, from the spectral propagator.
std::vector<PeakSample> peak_probability_profile(const InitialState& init, double theta,
                                                 const std::vector<long>& times,
                                                 const HexLattice& lattice);

}  // namespace hexwalk
