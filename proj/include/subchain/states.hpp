#pragma once

#include "subchain/types.hpp"

namespace subchain {

/// Unit excitation on site j0 (1-based), all others in the ground state.
DipoleState single_excited(const ChainConfig& cfg, int j0);

/// The analytic state whose spectral density is flat over the subradiant
/// region for an infinite chain: beta_{N/2} = 1 - a/pi and
/// beta_j = -sin[a(j - N/2)] / [pi (j - N/2)] elsewhere. Requires even N.
DipoleState most_subradiant(const ChainConfig& cfg);

/// Phase-matched state beta_j = e^{i a (j-1)}/sqrt(N) (k = k0 member of
/// the generalized Dicke family).
DipoleState timed_dicke(const ChainConfig& cfg);

/// beta_j = 1/sqrt(N).
DipoleState uniform(const ChainConfig& cfg);

/// All amplitudes zero (starting point for driven runs).
DipoleState zero_state(const ChainConfig& cfg);

/// Infinite-chain limit of |A_N(x)| for the most subradiant state:
/// 1 outside the light line, 0 inside. Throws at the jump points x = +-a.
double subradiant_amplitude_limit(double a, double x);

}  // namespace subchain
