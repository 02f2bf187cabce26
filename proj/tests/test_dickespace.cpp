#include "subchain/dickespace.hpp"

#include "subchain/states.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace subchain;

namespace {

DipoleState random_state(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  DipoleState st;
  st.beta.resize(n);
  for (int j = 0; j < n; ++j) st.beta[j] = Complex(d(gen), d(gen));
  return st;
}

}  // namespace

TEST_CASE("projection amplitude on canonical states") {
  const ChainConfig cfg = ChainConfig::scalar(16, 1.2);

  // phases cancel at x = a for the phase-matched state
  CHECK(std::abs(amplitude(timed_dicke(cfg), cfg.a) - std::sqrt(16.0)) < 1e-12);

  // a single excited atom has unit magnitude everywhere
  const DipoleState single = single_excited(cfg, 8);
  for (double x : {-3.0, -0.5, 0.0, 1.0, 3.1})
    CHECK(std::abs(amplitude(single, x)) == doctest::Approx(1.0).epsilon(1e-14));

  // full-period geometric sum vanishes
  CHECK(std::abs(amplitude(uniform(cfg), 2.0 * M_PI / 16.0)) < 1e-13);
}

TEST_CASE("partial amplitudes are prefix sums") {
  const ChainConfig cfg = ChainConfig::scalar(9, 0.8);
  const DipoleState st = random_state(9, 71);
  const double x = 1.37;
  const auto part = partial_amplitudes(st, x);
  REQUIRE(part.size() == 9);
  CHECK(std::abs(part[0] - st.beta[0]) < 1e-15);
  CHECK(std::abs(part[8] - amplitude(st, x)) < 1e-13);
  // telescoping
  const Complex last = std::polar(1.0, -x * 8) * st.beta[8];
  CHECK(std::abs((part[8] - part[7]) - last) < 1e-13);

  const auto up = partial_amplitudes(uniform(cfg), 0.0);
  for (int n = 1; n <= 9; ++n)
    CHECK(std::abs(up[n - 1] - Complex(n / 3.0, 0.0)) < 1e-13);
}

TEST_CASE("amplitude is linear in the state") {
  const int n = 12;
  const DipoleState u = random_state(n, 1);
  const DipoleState v = random_state(n, 2);
  const Complex c1(0.7, -0.2), c2(-1.3, 0.4);
  DipoleState w;
  w.beta = c1 * u.beta + c2 * v.beta;
  for (double x : {-2.0, 0.3, 2.9}) {
    const Complex lhs = amplitude(w, x);
    const Complex rhs = c1 * amplitude(u, x) + c2 * amplitude(v, x);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("density of a single excited atom is flat 1/(2 pi)") {
  const ChainConfig cfg = ChainConfig::scalar(100, M_PI_2);
  const auto grid = SpectralGrid::uniform(512, cfg.a);
  const auto dens = density(single_excited(cfg, 50), grid);
  for (double p : dens.p)
    CHECK(p == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("density of the phase-matched state peaks at x = a with 1/N width") {
  const ChainConfig cfg = ChainConfig::vectorial(100, M_PI_2, M_PI_2);
  const auto grid = SpectralGrid::uniform(1024, cfg.a);
  const auto dens = density(timed_dicke(cfg), grid);
  int imax = 0;
  for (int i = 1; i < grid.size(); ++i)
    if (dens.p[i] > dens.p[imax]) imax = i;
  CHECK(std::abs(grid.points[imax] - cfg.a) < 2.0 * M_PI / 100.0);

  // half maximum crossed within a few Dirichlet widths of the peak
  const double half = 0.5 * dens.p[imax];
  double width = 0.0;
  for (int i = imax; i < grid.size(); ++i)
    if (dens.p[i] < half) {
      width = grid.points[i] - grid.points[imax];
      break;
    }
  CHECK(width > 0.0);
  CHECK(width < 6.0 / 100.0);
}

TEST_CASE("density is invariant under global phase and scale") {
  const ChainConfig cfg = ChainConfig::scalar(20, 1.0);
  const auto grid = SpectralGrid::uniform(256, cfg.a);
  const DipoleState st = random_state(20, 5);
  DipoleState scaled;
  scaled.beta = st.beta * std::polar(3.7, 1.1);
  const auto a = density(st, grid);
  const auto b = density(scaled, grid);
  for (int i = 0; i < grid.size(); ++i)
    CHECK(a.p[i] == doctest::Approx(b.p[i]).epsilon(1e-12));
}

TEST_CASE("density rejects the zero state and renormalizes exactly") {
  const ChainConfig cfg = ChainConfig::scalar(10, 1.0);
  const auto grid = SpectralGrid::uniform(128, cfg.a);
  CHECK_THROWS_AS(density(zero_state(cfg), grid), std::invalid_argument);

  const auto dens = density(random_state(10, 9), grid);
  CHECK(integrate_periodic(grid, dens.p) == doctest::Approx(1.0).epsilon(1e-14));
  for (double p : dens.p) CHECK(p >= 0.0);
}

TEST_CASE("plancherel on random states") {
  const auto grid = SpectralGrid::uniform(4096, M_PI_2);
  for (unsigned seed : {31u, 32u, 33u}) {
    const DipoleState st = random_state(64, seed);
    std::vector<double> a2(grid.points.size());
    for (std::size_t i = 0; i < a2.size(); ++i)
      a2[i] = std::norm(amplitude(st, grid.points[i]));
    CHECK(std::abs(integrate_periodic(grid, a2) / (2.0 * M_PI) - st.norm2()) <
          1e-8);
  }
}

TEST_CASE("overlap of generalized Dicke states") {
  const ChainConfig cfg = ChainConfig::scalar(12, 1.0);
  CHECK(overlap(0.7, 0.7, cfg) == Complex(12.0, 0.0));
  CHECK(std::abs(overlap(0.7 + 2.0 * M_PI / 12.0, 0.7, cfg)) < 1e-12);
  CHECK(std::abs(overlap(0.7 + 2.0 * M_PI, 0.7, cfg) - Complex(12.0, 0.0)) < 1e-9);

  // magnitude never exceeds N
  for (double u : {0.01, 0.4, 1.9, 3.0})
    CHECK(std::abs(overlap(u, 0.0, cfg)) <= 12.0 + 1e-12);
}

TEST_CASE("dirichlet ratio handles the removable singularities") {
  CHECK(dirichlet_ratio(0.0, 7) == 7.0);
  CHECK(dirichlet_ratio(2.0 * M_PI, 7) == 7.0);     // (-1)^{m(n-1)} with even n-1
  CHECK(dirichlet_ratio(2.0 * M_PI, 8) == -8.0);
  const double u = 1.3;
  CHECK(dirichlet_ratio(u, 5) ==
        doctest::Approx(std::sin(2.5 * u) / std::sin(0.5 * u)).epsilon(1e-13));
  // continuity across the small-argument branch
  CHECK(dirichlet_ratio(1e-8, 9) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("periodic trapezoid integrates constants exactly") {
  const auto grid = SpectralGrid::uniform(97, 1.0);
  const std::vector<double> ones(97, 1.0);
  CHECK(integrate_periodic(grid, ones) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
}
