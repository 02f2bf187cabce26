#pragma once

#include "subchain/types.hpp"

#include <string>
#include <vector>

namespace subchain {

/// Sampling grid on the first Brillouin zone x = kd in (-pi, pi].
struct SpectralGrid {
  std::vector<double> points;   // strictly increasing
  double edge_offset = 0.0;     // min distance of any point from +-a

  int size() const { return static_cast<int>(points.size()); }
  double step() const;          // spacing (uniform grids)

  /// Uniform grid shifted by half a step so +-a are never sampled
  /// exactly; symmetric under x -> -x.
  static SpectralGrid uniform(int n_points, double a);
  static SpectralGrid from_points(std::vector<double> pts, double a);
};

enum class SpectrumMethod { ExactSum, SincApprox, InfiniteClosedForm };

/// Sampled collective decay rate and shift over a grid.
struct SpectrumResult {
  SpectralGrid grid;
  std::vector<double> gamma;    // >= 0 (tiny negatives clamped)
  std::vector<double> omega;
  ChainConfig chain;
  SpectrumMethod method = SpectrumMethod::ExactSum;
};

/// Collective decay rate as the real quadratic form v^dag Re(M) v with
/// v_j = e^{i x (j-1)}/sqrt(N) and M the coupling matrix.
double gamma_exact(const ChainConfig& cfg, double x);
double gamma_exact_with_matrix(const Eigen::MatrixXd& decay_part, double x);

/// Large-N decay rate: the m-sum of sinc^2 integrals over
/// [(x-a)/2, (x+a)/2], each integral by adaptive quadrature to absolute
/// tolerance 1e-8; the m-sum keeps every m*pi inside the interval
/// widened by 40*pi/N on each side.
double gamma_sinc_approx(const ChainConfig& cfg, double x);

/// Collective frequency shift, single sum over l = |j-m| with the
/// degeneracy factor N-l.
double omega_finite(const ChainConfig& cfg, double x);

/// Infinite-chain decay rate (first Brillouin zone). The rectangular
/// function is taken on the open interval; at_light_line flags |x| = a.
struct LightLineValue {
  double value = 0.0;
  bool at_light_line = false;
};
LightLineValue gamma_infinite(double a, double x, Model model,
                              double delta = 0.0);

/// Infinite-chain shift: log closed form (scalar) or the log/Li2/Li3
/// closed form (vectorial). Throws for x within 1e-6 of +-a whenever
/// the log term is present (always scalar; vectorial unless delta = 0,
/// which stays finite at the light line).
double omega_infinite(double a, double x, Model model, double delta = 0.0);

/// Evaluate a full curve on a grid with the chosen method. Decay values
/// in [-1e-9, 0) are clamped to zero; anything more negative throws.
SpectrumResult evaluate_spectrum(const ChainConfig& cfg,
                                 const SpectralGrid& grid,
                                 SpectrumMethod method);

}  // namespace subchain
