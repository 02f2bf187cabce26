#include "subchain/dynamics.hpp"

#include "subchain/dickespace.hpp"
#include "subchain/kernels.hpp"
#include "subchain/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace subchain {

void DriveConfig::validate() const {
  if (rabi < 0.0) throw std::invalid_argument("DriveConfig: rabi must be >= 0");
  if (!(t_off >= 0.0)) throw std::invalid_argument("DriveConfig: t_off must be >= 0");
}

DriveConfig DriveConfig::off() { return {0.0, 0.0, 0.0}; }

DriveConfig DriveConfig::continuous(double rabi, double detuning) {
  return {rabi, detuning, drive_always_on};
}

DriveConfig DriveConfig::pulsed(double rabi, double detuning, double t_off) {
  return {rabi, detuning, t_off};
}

void IntegrationConfig::validate() const {
  if (!(dt > 0.0 && dt <= 0.01))
    throw std::invalid_argument("IntegrationConfig: dt must lie in (0, 0.01]");
  if (!(t_end >= 0.0))
    throw std::invalid_argument("IntegrationConfig: t_end must be >= 0");
  for (double t : snapshot_times)
    if (t < 0.0 || t > t_end + 1e-12)
      throw std::invalid_argument("IntegrationConfig: snapshot times must lie in [0, t_end]");
}

namespace {

Eigen::VectorXcd drive_phases(const ChainConfig& cfg) {
  Eigen::VectorXcd ph(cfg.n_atoms);
  for (int j = 0; j < cfg.n_atoms; ++j) ph[j] = std::polar(1.0, cfg.a * j);
  return ph;
}

// dbeta/dt = (i Delta0) beta - (1/2) M beta - i (Omega0/2) phases [on]
Eigen::VectorXcd deriv(const Eigen::VectorXcd& beta,
                       const Eigen::MatrixXcd& coupling,
                       const Eigen::VectorXcd& phases,
                       const DriveConfig& drive, bool drive_on) {
  Eigen::VectorXcd d = Complex(0.0, drive.detuning) * beta - 0.5 * (coupling * beta);
  if (drive_on) d -= Complex(0.0, 0.5 * drive.rabi) * phases;
  return d;
}

void rk4_step(Eigen::VectorXcd& beta, const Eigen::MatrixXcd& coupling,
              const Eigen::VectorXcd& phases, const DriveConfig& drive,
              bool drive_on, double h) {
  // autonomous within a segment: the drive indicator is constant
  const Eigen::VectorXcd k1 = deriv(beta, coupling, phases, drive, drive_on);
  const Eigen::VectorXcd k2 = deriv(beta + 0.5 * h * k1, coupling, phases, drive, drive_on);
  const Eigen::VectorXcd k3 = deriv(beta + 0.5 * h * k2, coupling, phases, drive, drive_on);
  const Eigen::VectorXcd k4 = deriv(beta + h * k3, coupling, phases, drive, drive_on);
  beta += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Eigen::VectorXcd rhs(const DipoleState& state, const ChainConfig& cfg,
                     const DriveConfig& drive, double t) {
  cfg.validate();
  drive.validate();
  if (state.size() != cfg.n_atoms)
    throw std::invalid_argument("rhs: state size does not match chain");
  return deriv(state.beta, coupling_matrix(cfg), drive_phases(cfg), drive,
               drive.active_at(t));
}

Trajectory integrate_with_matrix(const DipoleState& initial,
                                 const ChainConfig& cfg,
                                 const Eigen::MatrixXcd& coupling,
                                 const DriveConfig& drive,
                                 const IntegrationConfig& icfg) {
  cfg.validate();
  drive.validate();
  icfg.validate();
  if (initial.size() != cfg.n_atoms)
    throw std::invalid_argument("integrate: state size does not match chain");

  Trajectory traj;
  traj.chain = cfg;

  std::vector<double> wanted = icfg.snapshot_times;
  std::sort(wanted.begin(), wanted.end());
  std::size_t next_wanted = 0;

  const Eigen::VectorXcd phases = drive_phases(cfg);
  Eigen::VectorXcd beta = initial.beta;
  double t = 0.0;

  auto record = [&](double now) {
    traj.times.push_back(now);
    traj.mean_excitation_series.push_back(beta.squaredNorm() / cfg.n_atoms);
    if (icfg.store_all_states)
      traj.dense_states.push_back(DipoleState{beta, now});
  };
  // emit every requested snapshot closer to the current stamp than to
  // any later one; steps are dt wide so the error stays <= dt/2
  auto emit_snapshots = [&](double now, double t_next) {
    while (next_wanted < wanted.size() &&
           (std::abs(wanted[next_wanted] - now) <=
                std::abs(t_next - wanted[next_wanted]) + 1e-15)) {
      traj.snapshots.push_back(DipoleState{beta, now});
      ++next_wanted;
    }
  };

  record(0.0);

  const long n_steps = std::lround(std::ceil(icfg.t_end / icfg.dt - 1e-9));
  for (long k = 0; k < n_steps; ++k) {
    const double t0 = k * icfg.dt;
    const double t1 = std::min((k + 1) * icfg.dt, icfg.t_end);
    emit_snapshots(t0, t1);

    if (drive.rabi != 0.0 && t0 < drive.t_off && drive.t_off < t1) {
      // split the straddling step at the switch-off time exactly
      rk4_step(beta, coupling, phases, drive, true, drive.t_off - t0);
      rk4_step(beta, coupling, phases, drive, false, t1 - drive.t_off);
    } else {
      rk4_step(beta, coupling, phases, drive, drive.active_at(t0), t1 - t0);
    }
    t = t1;
    if (!beta.allFinite()) {
      std::ostringstream msg;
      msg << "integrate: state became non-finite at t = " << t
          << " (step " << k + 1 << " of " << n_steps << ")";
      throw std::runtime_error(msg.str());
    }
    record(t);
  }
  emit_snapshots(t, std::numeric_limits<double>::infinity());
  traj.final_state = DipoleState{beta, t};
  return traj;
}

Trajectory integrate(const DipoleState& initial, const ChainConfig& cfg,
                     const DriveConfig& drive, const IntegrationConfig& icfg) {
  return integrate_with_matrix(initial, cfg, coupling_matrix(cfg), drive, icfg);
}

double mean_excitation(const DipoleState& state) {
  if (state.size() == 0) return 0.0;
  return state.norm2() / state.size();
}

double spectral_rhs_check(const DipoleState& state, const ChainConfig& cfg,
                          const DriveConfig& drive, double x) {
  cfg.validate();
  if (cfg.model != Model::Scalar)
    throw std::invalid_argument("spectral_rhs_check: derived for the scalar kernel");
  const int n = cfg.n_atoms;

  // route a: project the site-basis rhs
  DipoleState dstate;
  dstate.beta = rhs(state, cfg, drive, state.time);
  const Complex via_sites = amplitude(dstate, x);

  // route b: l-space form. The sum over site offsets l = j - m gives a
  // prefix amplitude A_{N-l} for l > 0 and the complementary partial sum
  // A_N - A_l for l < 0.
  const std::vector<Complex> part = partial_amplitudes(state, x);
  const Complex a_n = part[n - 1];
  Complex via_spectral = (Complex(0.0, drive.detuning) - 0.5) * a_n;
  if (drive.active_at(state.time)) {
    const double u = x - cfg.a;
    via_spectral -= Complex(0.0, 0.5 * drive.rabi) * dirichlet_ratio(u, n) *
                    std::polar(1.0, -0.5 * u * (n - 1));
  }
  for (int l = 1; l < n; ++l) {
    const Complex g = scalar_kernel(cfg.a * l).g();
    const Complex fwd = std::polar(1.0, -x * l) * part[n - l - 1];
    const Complex bwd = std::polar(1.0, x * l) * (a_n - part[l - 1]);
    via_spectral -= 0.5 * g * (fwd + bwd);
  }
  return std::abs(via_sites - via_spectral);
}

InfiniteDriveSolution infinite_chain_solution(double a, double x,
                                              const DriveConfig& drive,
                                              double t,
                                              Complex initial_amplitude) {
  drive.validate();
  InfiniteDriveSolution sol;
  sol.gamma_inf = gamma_infinite(a, x, Model::Scalar).value;
  sol.omega_inf = omega_infinite(a, x, Model::Scalar);

  const Complex lambda(-0.5 * sol.gamma_inf,
                       drive.detuning + 0.5 * sol.omega_inf);
  const Complex propagator = std::exp(lambda * t);
  sol.regular = initial_amplitude * propagator;
  if (drive.rabi != 0.0) {
    const Complex denom(2.0 * drive.detuning + sol.omega_inf, sol.gamma_inf);
    if (std::abs(denom) < 1e-14)
      throw std::domain_error("infinite_chain_solution: driven exactly on the dressed resonance");
    sol.delta_coefficient = 2.0 * M_PI * drive.rabi / denom * (1.0 - propagator);
  }
  return sol;
}

double energy_balance_residual(const Trajectory& traj) {
  const auto& st = traj.dense_states;
  if (st.size() < 3)
    throw std::invalid_argument(
        "energy_balance_residual: trajectory must be recorded with store_all_states");
  const Eigen::MatrixXd decay_part = coupling_matrix(traj.chain).real();
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < st.size(); ++k) {
    const double dnorm = (st[k + 1].norm2() - st[k - 1].norm2()) /
                         (st[k + 1].time - st[k - 1].time);
    const Eigen::VectorXd br = st[k].beta.real();
    const Eigen::VectorXd bi = st[k].beta.imag();
    const double emitted = br.dot(decay_part * br) + bi.dot(decay_part * bi);
    worst = std::max(worst, std::abs(dnorm + emitted));
  }
  return worst;
}

}  // namespace subchain
