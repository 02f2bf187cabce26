#include "subchain/states.hpp"

#include <cmath>
#include <stdexcept>

namespace subchain {

DipoleState single_excited(const ChainConfig& cfg, int j0) {
  cfg.validate();
  if (j0 < 1 || j0 > cfg.n_atoms)
    throw std::out_of_range("single_excited: site index out of range");
  DipoleState st;
  st.beta = Eigen::VectorXcd::Zero(cfg.n_atoms);
  st.beta[j0 - 1] = 1.0;
  return st;
}

DipoleState most_subradiant(const ChainConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_atoms;
  if (n % 2 != 0)
    throw std::invalid_argument(
        "most_subradiant: the construction centers on site N/2 and needs even N; use N+1");
  DipoleState st;
  st.beta = Eigen::VectorXcd::Zero(n);
  const int c = n / 2;  // 1-based center site
  for (int j = 1; j <= n; ++j) {
    if (j == c) {
      st.beta[j - 1] = 1.0 - cfg.a / M_PI;
    } else {
      const double m = j - c;
      st.beta[j - 1] = -std::sin(cfg.a * m) / (M_PI * m);
    }
  }
  return st;
}

DipoleState timed_dicke(const ChainConfig& cfg) {
  cfg.validate();
  DipoleState st;
  st.beta.resize(cfg.n_atoms);
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n_atoms));
  for (int j = 0; j < cfg.n_atoms; ++j)
    st.beta[j] = std::polar(scale, cfg.a * j);
  return st;
}

DipoleState uniform(const ChainConfig& cfg) {
  cfg.validate();
  DipoleState st;
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n_atoms));
  st.beta = Eigen::VectorXcd::Constant(cfg.n_atoms, Complex(scale, 0.0));
  return st;
}

DipoleState zero_state(const ChainConfig& cfg) {
  cfg.validate();
  DipoleState st;
  st.beta = Eigen::VectorXcd::Zero(cfg.n_atoms);
  return st;
}

double subradiant_amplitude_limit(double a, double x) {
  if (!(a > 0.0 && a < M_PI))
    throw std::invalid_argument("subradiant_amplitude_limit: need 0 < a < pi");
  if (std::abs(x) > M_PI + 1e-12)
    throw std::invalid_argument("subradiant_amplitude_limit: |x| must be <= pi");
  if (std::abs(std::abs(x) - a) < 1e-12)
    throw std::domain_error("subradiant_amplitude_limit: jump point x = +-a");

  // |A_inf(x)| = |pi - a + theta2 - theta1|/pi with
  // theta_{1,2} = arctan[sin(x +- a) / (1 - cos(x +- a))]
  auto branch = [](double u) {
    const double den = 1.0 - std::cos(u);
    return std::atan(std::sin(u) / den);
  };
  const double theta1 = branch(x + a);
  const double theta2 = branch(x - a);
  return std::abs(M_PI - a + theta2 - theta1) / M_PI;
}

}  // namespace subchain
