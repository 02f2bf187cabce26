#include "subchain/dickespace.hpp"

#include <cmath>
#include <stdexcept>

namespace subchain {

double dirichlet_ratio(double u, int n) {
  // reduce to the nearest period so both sines keep full precision
  const double m = std::round(u / (2.0 * M_PI));
  const double v = u - 2.0 * M_PI * m;
  const long mi = static_cast<long>(m);
  const double sign = (mi * (n - 1)) % 2 == 0 ? 1.0 : -1.0;
  if (std::abs(v) < 1e-8) {
    // sin(nv/2)/sin(v/2) = n (1 - (n^2-1) v^2 / 24 + ...)
    return sign * n * (1.0 - (double(n) * n - 1.0) * v * v / 24.0);
  }
  return sign * std::sin(0.5 * n * v) / std::sin(0.5 * v);
}

Complex amplitude(const DipoleState& state, double x) {
  Complex s = 0.0;
  for (int j = 0; j < state.size(); ++j)
    s += std::polar(1.0, -x * j) * state.beta[j];
  return s;
}

std::vector<Complex> partial_amplitudes(const DipoleState& state, double x) {
  std::vector<Complex> out(state.size());
  Complex s = 0.0;
  for (int j = 0; j < state.size(); ++j) {
    s += std::polar(1.0, -x * j) * state.beta[j];
    out[j] = s;
  }
  return out;
}

double integrate_periodic(const SpectralGrid& grid,
                          const std::vector<double>& values) {
  const std::size_t n = grid.points.size();
  if (values.size() != n)
    throw std::invalid_argument("integrate_periodic: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    s += 0.5 * (values[i] + values[i + 1]) * (grid.points[i + 1] - grid.points[i]);
  // wrap segment closing the period
  const double wrap = 2.0 * M_PI - (grid.points.back() - grid.points.front());
  s += 0.5 * (values.back() + values.front()) * wrap;
  return s;
}

SpectralDensity density(const DipoleState& state, const SpectralGrid& grid) {
  if (!(state.norm2() > 0.0))
    throw std::invalid_argument("density: zero-norm state");
  SpectralDensity out;
  out.grid = grid;
  out.p.resize(grid.points.size());
  for (std::size_t i = 0; i < out.p.size(); ++i)
    out.p[i] = std::norm(amplitude(state, grid.points[i]));
  const double total = integrate_periodic(grid, out.p);
  for (double& v : out.p) v /= total;
  return out;
}

Complex overlap(double x1, double x2, const ChainConfig& cfg) {
  cfg.validate();
  const double u = x1 - x2;
  const int n = cfg.n_atoms;
  return dirichlet_ratio(u, n) * std::polar(1.0, 0.5 * u * (n - 1));
}

}  // namespace subchain
