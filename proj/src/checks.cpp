#include "subchain/checks.hpp"

#include "subchain/dickespace.hpp"
#include "subchain/dynamics.hpp"
#include "subchain/kernels.hpp"
#include "subchain/quadrature.hpp"
#include "subchain/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace subchain {

namespace {

CheckResult make_result(const std::string& name, double measured,
                        double tolerance, const std::string& detail = {}) {
  return {name, measured <= tolerance, measured, tolerance, detail};
}

DipoleState random_state(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  DipoleState st;
  st.beta.resize(n);
  for (int j = 0; j < n; ++j) st.beta[j] = Complex(dist(gen), dist(gen));
  return st;
}

CheckResult check_magic_angle(bool quick) {
  const int n_samples = quick ? 1000 : 10000;
  double worst = 0.0;
  for (int i = 1; i <= n_samples; ++i) {
    const double r = 50.0 * i / n_samples;
    const ComplexRate v = vector_kernel(r, magic_angle);
    const ComplexRate s = scalar_kernel(r);
    worst = std::max({worst, std::abs(v.decay - s.decay), std::abs(v.shift - s.shift)});
  }
  return make_result("magic_angle_kernel", worst, 1e-12,
                     "vectorial kernel at acos(1/sqrt 3) vs scalar, r in (0, 50]");
}

CheckResult check_angular_average() {
  // (1/2) int_0^pi sin(t) cos(r cos t) dt = sin(r)/r
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double integral = integrate_adaptive(
        [r](double t) { return 0.5 * std::sin(t) * std::cos(r * std::cos(t)); },
        0.0, M_PI, 1e-10);
    worst = std::max(worst, std::abs(integral - sinc(r)));
  }
  return make_result("angular_average_identity", worst, 1e-8,
                     "quadrature of the solid-angle average vs sin(r)/r");
}

CheckResult check_plancherel(bool quick) {
  const int grid_points = quick ? 1024 : 4096;
  const SpectralGrid grid = SpectralGrid::uniform(grid_points, M_PI_2);
  double worst = 0.0;
  for (unsigned seed : {11u, 12u, 13u, 14u, 15u}) {
    const DipoleState st = random_state(40, seed);
    std::vector<double> a2(grid.points.size());
    for (std::size_t i = 0; i < a2.size(); ++i)
      a2[i] = std::norm(amplitude(st, grid.points[i]));
    const double lhs = integrate_periodic(grid, a2) / (2.0 * M_PI);
    worst = std::max(worst, std::abs(lhs - st.norm2()));
  }
  return make_result("plancherel", worst, 1e-8,
                     "(1/2pi) int |A|^2 dx vs sum |beta|^2, random states");
}

CheckResult check_density_normalization(bool quick) {
  const SpectralGrid grid = SpectralGrid::uniform(quick ? 512 : 1024, M_PI_2);
  const ChainConfig cfg = ChainConfig::scalar(64, M_PI_2);
  double worst = 0.0;
  for (unsigned seed : {21u, 22u, 23u}) {
    const SpectralDensity d = density(random_state(cfg.n_atoms, seed), grid);
    worst = std::max(worst, std::abs(integrate_periodic(grid, d.p) - 1.0));
  }
  return make_result("density_normalization", worst, 1e-8,
                     "unit integral of the spectral density");
}

CheckResult check_spectral_rhs(bool quick) {
  const int n = quick ? 8 : 30;
  const int n_states = quick ? 3 : 10;
  const int n_points = quick ? 3 : 10;
  const ChainConfig cfg = ChainConfig::scalar(n, M_PI_2);
  double worst = 0.0;
  for (int s = 0; s < n_states; ++s) {
    DipoleState st = random_state(n, 100u + s);
    for (int i = 0; i < n_points; ++i) {
      const double x = -M_PI + (i + 0.5) * 2.0 * M_PI / n_points;
      const DriveConfig drive =
          s % 2 == 0 ? DriveConfig::off() : DriveConfig::continuous(0.1, 10.0);
      worst = std::max(worst, spectral_rhs_check(st, cfg, drive, x));
    }
  }
  return make_result("spectral_rhs_identity", worst, 1e-10,
                     "site-basis rhs projection vs l-space form");
}

CheckResult check_energy_balance(bool quick, bool mutate) {
  const int n = quick ? 30 : 100;
  const ChainConfig cfg = ChainConfig::scalar(n, M_PI_2);
  DipoleState st = random_state(n, 7u);
  st.beta /= std::sqrt(st.norm2());

  Eigen::MatrixXcd coupling = coupling_matrix(cfg);
  if (mutate) {
    // test hook: flip the sign of the off-diagonal decay part
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        if (j != m) coupling(j, m) = Complex(-coupling(j, m).real(),
                                             coupling(j, m).imag());
  }

  IntegrationConfig icfg;
  icfg.dt = 1e-3;
  icfg.t_end = quick ? 0.5 : 2.0;
  icfg.store_all_states = true;

  const Trajectory coarse =
      integrate_with_matrix(st, cfg, coupling, DriveConfig::off(), icfg);
  const double res_coarse = energy_balance_residual(coarse);

  icfg.dt = 5e-4;
  const Trajectory fine =
      integrate_with_matrix(st, cfg, coupling, DriveConfig::off(), icfg);
  const double res_fine = energy_balance_residual(fine);

  const double ratio = res_fine > 0.0 ? res_coarse / res_fine : 0.0;
  std::ostringstream detail;
  detail << "residual " << res_coarse << " at dt=1e-3, shrink factor "
         << ratio << " under halving";
  CheckResult r = make_result("energy_balance", res_coarse, 1e-5, detail.str());
  // centered differences are second order: halving dt must shrink the
  // residual by about 4
  if (ratio < 3.4 || ratio > 4.6) r.pass = false;
  return r;
}

CheckResult check_step_halving(bool quick) {
  const int n = quick ? 30 : 100;
  const double t_end = quick ? 3.0 : 10.0;
  const ChainConfig cfg = ChainConfig::vectorial(n, M_PI_2, M_PI_2);
  const DipoleState st = single_excited(cfg, n / 2);

  IntegrationConfig icfg;
  icfg.dt = 1e-3;
  icfg.t_end = t_end;
  const Trajectory coarse = integrate(st, cfg, DriveConfig::off(), icfg);
  icfg.dt = 5e-4;
  const Trajectory fine = integrate(st, cfg, DriveConfig::off(), icfg);

  const double m_coarse = coarse.mean_excitation_series.back();
  const double m_fine = fine.mean_excitation_series.back();
  const double rel = std::abs(m_coarse - m_fine) / std::abs(m_fine);
  return make_result("step_halving_convergence", rel, 1e-8,
                     "relative change of the final mean excitation under dt/2");
}

}  // namespace

std::vector<CheckResult> run_validation(const CheckOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_magic_angle(opts.quick));
  results.push_back(check_angular_average());
  results.push_back(check_plancherel(opts.quick));
  results.push_back(check_density_normalization(opts.quick));
  results.push_back(check_spectral_rhs(opts.quick));
  results.push_back(check_energy_balance(opts.quick, opts.mutate_kernel_sign));
  results.push_back(check_step_halving(opts.quick));
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace subchain
