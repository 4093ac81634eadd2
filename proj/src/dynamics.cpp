#include "hexwalk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hexwalk/error.hpp"

namespace hexwalk {

InitialState InitialState::two_node() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Kind::two_node, {{{1, 1, 0}, r}, {{1, 0, 1}, r}}};
}

InitialState InitialState::hexagon() {
  const double r = 1.0 / std::sqrt(6.0);
  return {Kind::hexagon,
          {{{1, 1, 0}, r}, {{1, 0, 1}, r}, {{1, 0, 0}, r},
           {{0, 0, 1}, r}, {{0, 1, 0}, r}, {{0, 1, 1}, r}}};
}

InitialState InitialState::single_node(VertexLabel v) { return {Kind::single_node, {{v, 1.0}}}; }

InitialState InitialState::custom(std::vector<std::pair<VertexLabel, Complex>> terms) {
  require(!terms.empty(), ErrorKind::invalid_parameter, "custom initial state has no terms");
  double sum = 0.0;
  for (const auto& [v, amp] : terms) {
    require(v.s == 0 || v.s == 1, ErrorKind::invalid_parameter, "sublattice bit must be 0 or 1");
    sum += std::norm(amp);
  }
  require(std::abs(sum - 1.0) < 1e-12, ErrorKind::invalid_parameter,
          "custom initial state must have unit norm");
  return {Kind::custom, std::move(terms)};
}

InitialState InitialState::from_name(std::string_view name) {
  if (name == "two-node") return two_node();
  if (name == "hexagon") return hexagon();
  if (name == "single-node") return single_node();
  fail(ErrorKind::invalid_parameter, "unknown initial state '" + std::string(name) +
                                         "' (expected two-node, hexagon or single-node)");
}

std::string InitialState::name() const {
  switch (kind) {
    case Kind::two_node: return "two-node";
    case Kind::hexagon: return "hexagon";
    case Kind::single_node: return "single-node";
    case Kind::custom: return "custom";
  }
  return "custom";
}

StateVector InitialState::prepare(const HexLattice& lattice, VertexLabel origin) const {
  StateVector state(lattice.size());
  for (const auto& [v, amp] : terms) {
    state[lattice.index(lattice.wrap(origin.x + v.x, origin.y + v.y, v.s))] += amp;
  }
  return state;
}

StateVector InitialState::prepare_centered(const HexLattice& lattice) const {
  return prepare(lattice, centered_origin(lattice));
}

VertexLabel centered_origin(const HexLattice& lattice) noexcept {
  return {lattice.n() / 2 - 1, lattice.n() / 2 - 1, 0};
}

long max_unwrapped_steps(const InitialState& init, const HexLattice& lattice) {
  const VertexLabel o = centered_origin(lattice);
  long slack = std::numeric_limits<long>::max();
  for (const auto& [v, amp] : init.terms) {
    for (const int c : {o.x + v.x, o.y + v.y}) {
      slack = std::min<long>(slack, std::min(c, lattice.n() - 1 - c));
    }
  }
  return std::max(slack, -1L);
}

int lattice_size_for(const InitialState& init, long steps) {
  for (int n = 2;; n += 2) {
    if (max_unwrapped_steps(init, HexLattice(n)) >= steps) return n;
  }
}

double std_deviation(const StateVector& state, const HexLattice& lattice) {
  require_dimension(state, lattice);
  double mx = 0.0, my = 0.0, total = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    const Point2D r = HexLattice::position(lattice.label(i));
    mx += p * r.x;
    my += p * r.y;
    total += p;
  }
  mx /= total;
  my /= total;
  double var = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    const Point2D r = HexLattice::position(lattice.label(i));
    var += p * ((r.x - mx) * (r.x - mx) + (r.y - my) * (r.y - my));
  }
  return std::sqrt(var / total);
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, ErrorKind::invalid_parameter,
          "linear fit needs at least two paired samples");
  const double count = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  require(sxx > 0.0, ErrorKind::invalid_parameter, "linear fit: abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

namespace {

void require_unwrapped(const InitialState& init, long steps, const HexLattice& lattice) {
  const long limit = max_unwrapped_steps(init, lattice);
  require(steps <= limit, ErrorKind::invalid_parameter,
          "lattice n=" + std::to_string(lattice.n()) + " lets the walker wrap after " +
              std::to_string(limit) + " steps; " + std::to_string(steps) +
              " requested (use n >= " + std::to_string(lattice_size_for(init, steps)) + ")");
}

}  // namespace

SigmaSeries sigma_series(const InitialState& init, double theta, long t_max,
                         const HexLattice& lattice) {
  require(t_max >= 5, ErrorKind::invalid_parameter, "sigma series needs t_max >= 5");
  require_unwrapped(init, t_max, lattice);

  SigmaSeries series;
  series.theta = theta;
  const Walk walk(lattice, WalkAngles::uniform(theta));
  StateVector state = init.prepare_centered(lattice);
  for (long t = 0; t <= t_max; ++t) {
    if (t > 0) walk.step_inplace(state);
    series.t.push_back(t);
    series.sigma.push_back(std_deviation(state, lattice));
  }

  series.fit_begin = t_max / 5;
  series.fit_end = t_max;
  std::vector<double> x, y;
  for (long t = series.fit_begin; t <= series.fit_end; ++t) {
    x.push_back(static_cast<double>(t));
    y.push_back(series.sigma[static_cast<std::size_t>(t)]);
  }
  series.fit = fit_line(x, y);
  return series;
}

std::vector<SweepPoint> theta_sweep(const InitialState& init, long t_probe,
                                    std::span<const double> thetas, const HexLattice& lattice) {
  require(!thetas.empty(), ErrorKind::invalid_parameter, "theta grid is empty");
  require(t_probe > 0, ErrorKind::invalid_parameter, "probe time must be positive");
  require_unwrapped(init, t_probe, lattice);

  const StateVector initial = init.prepare_centered(lattice);
  std::vector<SweepPoint> out;
  out.reserve(thetas.size());
  for (const double theta : thetas) {
    const StateVector state = Walk(lattice, WalkAngles::uniform(theta)).evolve(initial, t_probe);
    out.push_back({theta, std_deviation(state, lattice) / static_cast<double>(t_probe)});
  }
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  require(count >= 2, ErrorKind::invalid_parameter, "grid needs at least two points");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  }
  grid.back() = hi;
  return grid;
}

}  // namespace hexwalk
