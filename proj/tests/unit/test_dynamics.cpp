#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hexwalk/dynamics.hpp"
#include "hexwalk/error.hpp"

using namespace hexwalk;
using std::numbers::pi;

TEST_CASE("initial states") {
  for (const char* name : {"two-node", "hexagon", "single-node"}) {
    const InitialState init = InitialState::from_name(name);
    CHECK(init.name() == name);
    const HexLattice lattice(8);
    CHECK(std::abs(norm(init.prepare_centered(lattice)) - 1.0) < 1e-14);
  }
  CHECK(InitialState::hexagon().terms.size() == 6);
  CHECK_THROWS_AS(InitialState::from_name("triangle"), Error);
  CHECK_THROWS_AS(InitialState::custom({{{0, 0, 0}, Complex(0.5, 0.0)}}), Error);
  CHECK_NOTHROW(InitialState::custom({{{0, 0, 0}, Complex(0.6, 0.0)}, {{0, 0, 1}, Complex(0.0, 0.8)}}));
}

TEST_CASE("standard deviation of simple states") {
  const HexLattice lattice(8);
  CHECK(std_deviation(InitialState::single_node().prepare_centered(lattice), lattice) ==
        doctest::Approx(0.0));
  CHECK(std_deviation(InitialState::two_node().prepare_centered(lattice), lattice) ==
        doctest::Approx(0.5));
  CHECK(std_deviation(InitialState::hexagon().prepare_centered(lattice), lattice) ==
        doctest::Approx(1.0));
}

TEST_CASE("wrap guard") {
  const InitialState init = InitialState::hexagon();
  for (long steps : {1L, 10L, 58L, 100L}) {
    const int n = lattice_size_for(init, steps);
    CHECK(n % 2 == 0);
    CHECK(max_unwrapped_steps(init, HexLattice(n)) >= steps);
    if (n > 4) CHECK(max_unwrapped_steps(init, HexLattice(n - 2)) < steps);
  }
  const HexLattice small(16);
  CHECK_THROWS_AS(sigma_series(init, pi / 3, 100, small), Error);
}

TEST_CASE("no wrapped amplitude before the guard") {
  // Evolve on a lattice exactly at the guard and on a much larger one; the
  // distributions around the centre must agree.
  const InitialState init = InitialState::two_node();
  const long steps = 20;
  const HexLattice tight(lattice_size_for(init, steps));
  const HexLattice roomy(tight.n() + 20);
  const WalkAngles angles = WalkAngles::uniform(pi / 3);
  const double a = std_deviation(evolve(init.prepare_centered(tight), steps, angles, tight), tight);
  const double b = std_deviation(evolve(init.prepare_centered(roomy), steps, angles, roomy), roomy);
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("linear fit") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  const LinearFit fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}), Error);
}

TEST_CASE("uniform grid") {
  const auto grid = uniform_grid(0.0, pi, 65);
  CHECK(grid.size() == 65);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(pi));
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), Error);
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 0), Error);
}

TEST_CASE("ballistic spreading and slope ordering") {
  const InitialState init = InitialState::hexagon();
  const HexLattice lattice(lattice_size_for(init, 100));
  // Descending slope order.
  const std::vector<double> thetas{pi / 3, 11 * pi / 30, 7 * pi / 30, 4 * pi / 30, pi / 30};
  std::vector<double> slopes;
  for (double theta : thetas) {
    const SigmaSeries s = sigma_series(init, theta, 100, lattice);
    CHECK(s.fit_begin == 20);
    CHECK(s.fit_end == 100);
    CHECK(s.sigma.size() == 101);
    CHECK(s.sigma[0] == doctest::Approx(1.0));
    CHECK(s.fit.r_squared > 0.999);
    slopes.push_back(s.fit.slope);
  }
  CHECK(std::is_sorted(slopes.rbegin(), slopes.rend()));
  CHECK(slopes.front() == doctest::Approx(1.111).epsilon(0.01));
}

TEST_CASE("trivial angles do not spread") {
  const InitialState init = InitialState::hexagon();
  const HexLattice lattice(lattice_size_for(init, 40));
  for (double theta : {0.0, pi / 2, pi}) {
    const SigmaSeries s = sigma_series(init, theta, 40, lattice);
    CHECK(*std::max_element(s.sigma.begin(), s.sigma.end()) <= s.sigma[0] + 3.0);
  }
}

TEST_CASE("theta sweep") {
  const InitialState init = InitialState::hexagon();
  const long t_probe = 60;
  const HexLattice lattice(lattice_size_for(init, t_probe));
  const auto grid = uniform_grid(0.0, pi, 33);
  const auto sweep = theta_sweep(init, t_probe, grid, lattice);
  REQUIRE(sweep.size() == grid.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(std::abs(sweep[i].sigma_over_t - sweep[sweep.size() - 1 - i].sigma_over_t) < 1e-8);
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i <= 16; ++i) {
    if (sweep[i].sigma_over_t > sweep[best].sigma_over_t) best = i;
  }
  CHECK(std::abs(sweep[best].theta - pi / 3) <= pi / 32 + 1e-12);
  CHECK(sweep[16].sigma_over_t < 5.0 / t_probe);
  CHECK_THROWS_AS(theta_sweep(init, t_probe, std::vector<double>{}, lattice), Error);
}
