// Independent reference implementations used only to cross-check the
// library. Everything here is written from the defining sums and kept
// free of calls into the code paths under test.
#pragma once

#include "subchain/types.hpp"

#include <cmath>
#include <complex>

namespace oracles {

// Decay/shift pair kernels written out in raw trig form.
inline double raw_decay_kernel(const subchain::ChainConfig& cfg, double r) {
  if (cfg.model == subchain::Model::Scalar) return std::sin(r) / r;
  const double s2 = std::pow(std::sin(cfg.delta), 2);
  const double q = 3.0 * std::pow(std::cos(cfg.delta), 2) - 1.0;
  return 1.5 * (s2 * std::sin(r) / r +
                q * (std::sin(r) / (r * r * r) - std::cos(r) / (r * r)));
}

inline double raw_shift_kernel(const subchain::ChainConfig& cfg, double r) {
  if (cfg.model == subchain::Model::Scalar) return std::cos(r) / r;
  const double s2 = std::pow(std::sin(cfg.delta), 2);
  const double q = 3.0 * std::pow(std::cos(cfg.delta), 2) - 1.0;
  return 1.5 * (s2 * std::cos(r) / r +
                q * (std::sin(r) / (r * r) + std::cos(r) / (r * r * r)));
}

// Brute-force double sum for the collective decay rate.
inline double gamma_double_sum(const subchain::ChainConfig& cfg, double x) {
  const int n = cfg.n_atoms;
  double s = 0.0;
  for (int j = 1; j <= n; ++j)
    for (int m = 1; m <= n; ++m) {
      const double ker =
          j == m ? 1.0 : raw_decay_kernel(cfg, cfg.a * std::abs(j - m));
      s += ker * std::cos(x * (j - m));
    }
  return s / n;
}

// Brute-force double sum for the collective shift (off-diagonal only).
inline double omega_double_sum(const subchain::ChainConfig& cfg, double x) {
  const int n = cfg.n_atoms;
  double s = 0.0;
  for (int j = 1; j <= n; ++j)
    for (int m = 1; m <= n; ++m) {
      if (j == m) continue;
      s += raw_shift_kernel(cfg, cfg.a * std::abs(j - m)) * std::cos(x * (j - m));
    }
  return s / n;
}

// T_s(theta) = sum_{l>=1} e^{i theta l} / l^s by direct summation with a
// periodically resynced rotation plus a one-term Abel tail.
inline std::complex<double> unit_series(int order, double theta, long terms) {
  const std::complex<double> z = std::polar(1.0, theta);
  std::complex<double> rot = 1.0;
  std::complex<double> sum = 0.0;
  for (long l = 1; l <= terms; ++l) {
    rot = (l % 4096 == 1) ? std::polar(1.0, theta * static_cast<double>(l))
                          : rot * z;
    double lpow = static_cast<double>(l);
    if (order >= 2) lpow *= l;
    if (order >= 3) lpow *= l;
    sum += rot / lpow;
  }
  double tail_pow = static_cast<double>(terms + 1);
  if (order >= 2) tail_pow *= terms + 1;
  if (order >= 3) tail_pow *= terms + 1;
  sum += rot * z / ((1.0 - z) * tail_pow);
  return sum;
}

// Infinite-chain shift from the direct l-series
// 2 sum_l shift_kernel(a l) cos(x l), assembled from unit_series.
inline double omega_infinite_series(const subchain::ChainConfig& cfg, double x,
                                    long terms) {
  const double a = cfg.a;
  const std::complex<double> t1 =
      unit_series(1, a + x, terms) + unit_series(1, a - x, terms);
  if (cfg.model == subchain::Model::Scalar) return t1.real() / a;
  const std::complex<double> t2 =
      unit_series(2, a + x, terms) + unit_series(2, a - x, terms);
  const std::complex<double> t3 =
      unit_series(3, a + x, terms) + unit_series(3, a - x, terms);
  const double s2 = std::pow(std::sin(cfg.delta), 2);
  const double q = 3.0 * std::pow(std::cos(cfg.delta), 2) - 1.0;
  return 3.0 * (0.5 * s2 * t1.real() / a + 0.5 * q * t2.imag() / (a * a) +
                0.5 * q * t3.real() / (a * a * a));
}

}  // namespace oracles
