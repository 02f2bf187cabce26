#pragma once

#include "subchain/spectrum.hpp"
#include "subchain/types.hpp"

#include <vector>

namespace subchain {

/// Probability density on the Brillouin zone, unit integral.
struct SpectralDensity {
  SpectralGrid grid;
  std::vector<double> p;
};

/// sin(n u / 2) / sin(u / 2) with the removable singularities at
/// u = 2 pi m carried with their sign, (-1)^{m(n-1)} n.
double dirichlet_ratio(double u, int n);

/// Projection amplitude A_N(x) = sum_j e^{-i x (j-1)} beta_j
/// (unnormalized convention; the 1/sqrt(N) lives outside).
Complex amplitude(const DipoleState& state, double x);

/// Prefix amplitudes A_n(x) = sum_{m<=n} e^{-i x (m-1)} beta_m for
/// n = 1..N; entry N equals amplitude().
std::vector<Complex> partial_amplitudes(const DipoleState& state, double x);

/// |A_N(x)|^2 normalized to unit integral over the zone (periodic
/// trapezoid on the grid). Throws on a zero-norm state.
SpectralDensity density(const DipoleState& state, const SpectralGrid& grid);

/// Overlap of two generalized Dicke states, arguments x = k*d.
Complex overlap(double x1, double x2, const ChainConfig& cfg);

/// Trapezoidal integral over the zone treating the samples as one
/// period of a periodic function (wrap segment included).
double integrate_periodic(const SpectralGrid& grid,
                          const std::vector<double>& values);

}  // namespace subchain
