#include "hexwalk/localization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hexwalk/error.hpp"

namespace hexwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingular = 1e-9;

double wrap_angle(double x) {
  double r = std::remainder(x, 2.0 * kPi);
  if (r >= kPi - 1e-9) r -= 2.0 * kPi;
  return r;
}

// Second derivatives of f = cos k + cos l + cos(k - l).
struct FHessian {
  double kk, kl, ll;
};

FHessian f_hessian(double k, double l) {
  return {-std::cos(k) - std::cos(k - l), std::cos(k - l), -std::cos(l) - std::cos(k - l)};
}

}  // namespace

double phase(double k, double l, double theta) {
  const double f = std::cos(k) + std::cos(l) + std::cos(k - l);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double a = -f * s2 + std::cos(theta) * std::cos(theta);
  return std::acos(std::clamp(a * std::cos(theta), -1.0, 1.0));
}

Gradient cos_phase_gradient(double k, double l, double theta) {
  const double scale = std::cos(theta) * std::sin(theta) * std::sin(theta);
  return {scale * (std::sin(k) + std::sin(k - l)), scale * (std::sin(l) + std::sin(l - k))};
}

Gradient phase_gradient(double k, double l, double theta) {
  const double s = std::sin(phase(k, l, theta));
  require(s >= kSingular, ErrorKind::singular_point, "phase gradient undefined where sin(phase) = 0");
  const Gradient g = cos_phase_gradient(k, l, theta);
  return {-g.dk / s, -g.dl / s};
}

double hessian_det_formula(double k, double l, double theta) {
  const double ph = phase(k, l, theta);
  const double s = std::sin(ph);
  require(s >= kSingular, ErrorKind::singular_point, "Hessian formula singular where sin(phase) = 0");
  const double pref = std::cos(theta) * std::sin(theta) * std::sin(theta) / (s * s);
  const double m11 = std::cos(k) + std::cos(k - l);
  const double m22 = std::cos(l) + std::cos(k - l);
  const double m12 = -std::cos(ph) - std::cos(k - l);
  return pref * (m11 * m22 - m12 * m12);
}

double hessian_det_analytic(double k, double l, double theta) {
  const double ph = phase(k, l, theta);
  const double s = std::sin(ph);
  require(s >= kSingular, ErrorKind::singular_point, "Hessian undefined where sin(phase) = 0");
  const double c = std::cos(ph);
  // u = cos(phase) = cos(theta) (cos^2 theta - f sin^2 theta)
  const double scale = -std::cos(theta) * std::sin(theta) * std::sin(theta);
  const double uk = scale * (-std::sin(k) - std::sin(k - l));
  const double ul = scale * (-std::sin(l) + std::sin(k - l));
  const FHessian fh = f_hessian(k, l);
  const double ukk = scale * fh.kk, ukl = scale * fh.kl, ull = scale * fh.ll;
  // phase = arccos(u): phase_ij = -u_ij / s - u_i u_j c / s^3
  const double s3 = s * s * s;
  const double pkk = -ukk / s - uk * uk * c / s3;
  const double pkl = -ukl / s - uk * ul * c / s3;
  const double pll = -ull / s - ul * ul * c / s3;
  return pkk * pll - pkl * pkl;
}

double hessian_det_numeric(double k, double l, double theta, double h) {
  auto p = [&](double dk, double dl) { return phase(k + dk, l + dl, theta); };
  const double p0 = p(0, 0);
  const double pkk = (p(h, 0) - 2.0 * p0 + p(-h, 0)) / (h * h);
  const double pll = (p(0, h) - 2.0 * p0 + p(0, -h)) / (h * h);
  const double pkl = (p(h, h) - p(h, -h) - p(-h, h) + p(-h, -h)) / (4.0 * h * h);
  return pkk * pll - pkl * pkl;
}

std::vector<CriticalPoint> find_critical_points(double theta) {
  require(theta > 0.0 && theta < kPi / 2.0, ErrorKind::invalid_parameter,
          "critical-point search needs theta in (0, pi/2)");
  constexpr int kSeeds = 48;
  constexpr double kMergeDistance = 1e-6;

  std::vector<CriticalPoint> found;
  for (int i = 0; i < kSeeds; ++i) {
    for (int j = 0; j < kSeeds; ++j) {
      double k = -kPi + 2.0 * kPi * (i + 0.5) / kSeeds;
      double l = -kPi + 2.0 * kPi * (j + 0.5) / kSeeds;
      bool converged = false;
      for (int iter = 0; iter < 60; ++iter) {
        const double g1 = std::sin(k) + std::sin(k - l);
        const double g2 = std::sin(l) + std::sin(l - k);
        if (std::abs(g1) + std::abs(g2) < 1e-14) {
          converged = true;
          break;
        }
        const double j11 = std::cos(k) + std::cos(k - l);
        const double j12 = -std::cos(k - l);
        const double j22 = std::cos(l) + std::cos(k - l);
        const double det = j11 * j22 - j12 * j12;
        if (std::abs(det) < 1e-14) break;
        k -= (j22 * g1 - j12 * g2) / det;
        l -= (-j12 * g1 + j11 * g2) / det;
      }
      if (!converged) continue;
      k = wrap_angle(k);
      l = wrap_angle(l);
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const CriticalPoint& p) {
        return std::abs(wrap_angle(p.k - k)) < kMergeDistance &&
               std::abs(wrap_angle(p.l - l)) < kMergeDistance;
      });
      if (duplicate) continue;

      CriticalPoint cp;
      cp.k = k;
      cp.l = l;
      cp.equation_residual = std::abs(std::sin(k) + std::sin(k - l)) +
                             std::abs(std::sin(l) + std::sin(l - k));
      const Gradient g = cos_phase_gradient(k, l, theta);
      cp.gradient_residual = std::abs(g.dk) + std::abs(g.dl);
      cp.sin_phase = std::sin(phase(k, l, theta));
      cp.hessian_det = hessian_det_numeric(k, l, theta);
      found.push_back(cp);
    }
  }
  std::sort(found.begin(), found.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  });
  return found;
}

AmplitudeIntegrand::AmplitudeIntegrand(const HexLattice& lattice, double theta,
                                       const StateVector& initial)
    : lattice_(lattice), propagator_(lattice, theta, initial) {
  const int n = lattice.n();
  roots_.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) roots_[static_cast<std::size_t>(m)] = std::polar(1.0, 2.0 * kPi * m / n);
}

Complex AmplitudeIntegrand::amplitude(const VertexLabel& v, long t) const {
  require(lattice_.contains(v), ErrorKind::invalid_parameter, "amplitude: vertex outside lattice");
  require(t >= 0, ErrorKind::invalid_parameter, "amplitude: time must be nonnegative");
  const int n = lattice_.n();
  const auto& spectrum = propagator_.spectrum();
  const auto plus = propagator_.plus_overlaps();
  const auto minus = propagator_.minus_overlaps();
  const double td = static_cast<double>(t);
  Complex sum = 0.0;
  std::size_t i = 0;
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k, ++i) {
      const auto& es = spectrum.eigensystem(i);
      const int m = static_cast<int>((static_cast<long>(k) * v.x + static_cast<long>(l) * v.y) % n);
      const Complex omega = roots_[static_cast<std::size_t>(m)];
      const Complex rot = std::polar(1.0, td * es.phase);
      const Complex h_plus = es.v_plus[static_cast<std::size_t>(v.s)] * omega * plus[i];
      const Complex h_minus = es.v_minus[static_cast<std::size_t>(v.s)] * omega * minus[i];
      sum += h_plus * rot + h_minus * std::conj(rot);
    }
  }
  return sum / static_cast<double>(n);
}

Complex amplitude_at(const VertexLabel& v, const StateVector& initial, long t, double theta,
                     const HexLattice& lattice) {
  return AmplitudeIntegrand(lattice, theta, initial).amplitude(v, t);
}

DecayFit decay_fit(const VertexLabel& vertex, const InitialState& init, double theta,
                   long t_begin, long t_end, const HexLattice& lattice) {
  require(t_begin >= 1 && t_end > t_begin + 2, ErrorKind::invalid_parameter,
          "decay window must satisfy 1 <= t_begin < t_end - 2");
  const long limit = max_unwrapped_steps(init, lattice);
  require(t_end <= limit, ErrorKind::invalid_parameter,
          "lattice n=" + std::to_string(lattice.n()) + " wraps after " + std::to_string(limit) +
              " steps; decay window ends at " + std::to_string(t_end));

  const VertexLabel o = centered_origin(lattice);
  DecayFit fit;
  fit.vertex = lattice.wrap(o.x + vertex.x, o.y + vertex.y, vertex.s);
  const AmplitudeIntegrand integrand(lattice, theta, init.prepare_centered(lattice));
  for (long t = t_begin; t <= t_end; ++t) {
    fit.t.push_back(t);
    fit.probability.push_back(std::norm(integrand.amplitude(fit.vertex, t)));
  }

  const auto& p = fit.probability;
  std::vector<double> log_t, log_p;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i] >= p[i - 1] && p[i] > p[i + 1] && p[i] > 1e-300) {
      fit.envelope.push_back(i);
      log_t.push_back(std::log(static_cast<double>(fit.t[i])));
      log_p.push_back(std::log(p[i]));
    }
  }
  require(fit.envelope.size() >= 3, ErrorKind::numerical_failure,
          "decay fit found fewer than three envelope maxima");
  const LinearFit line = fit_line(log_t, log_p);
  fit.exponent = line.slope;
  fit.r_squared = line.r_squared;
  return fit;
}

std::vector<PeakSample> peak_probability_profile(const InitialState& init, double theta,
                                                 const std::vector<long>& times,
                                                 const HexLattice& lattice) {
  const long limit = max_unwrapped_steps(init, lattice);
  const SpectralPropagator propagator(lattice, theta, init.prepare_centered(lattice));
  std::vector<PeakSample> out;
  for (const long t : times) {
    require(t >= 0 && t <= limit, ErrorKind::invalid_parameter,
            "peak profile time outside the unwrapped window");
    const StateVector state = propagator.state_at(t);
    double peak = 0.0;
    for (const auto& a : state) peak = std::max(peak, std::norm(a));
    out.push_back({t, peak});
  }
  return out;
}

}  // namespace hexwalk
