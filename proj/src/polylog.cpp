#include "subchain/polylog.hpp"

#include <cmath>
#include <stdexcept>

namespace subchain {

namespace {

constexpr double two_pi = 2.0 * M_PI;
constexpr double zeta3 = 1.2020569031595942854;

// zeta(2n) for n = 1..28; the tail is 1 to double precision.
constexpr double zeta_even[] = {
    1.6449340668482264365,  1.0823232337111381915,  1.0173430619844491397,
    1.0040773561979443394,  1.0009945751278180853,  1.0002460865533080483,
    1.0000612481350587048,  1.0000152822594086519,  1.0000038172932649998,
    1.0000009539620338728,  1.0000002384505027277,  1.0000000596081890513,
    1.0000000149015548284,  1.0000000037253340248,  1.0000000009313274324,
    1.0000000002328311834,  1.0000000000582077209,  1.0000000000145519219,
    1.0000000000036379795,  1.0000000000009094948,  1.0000000000002273737,
    1.0000000000000568434,  1.0000000000000142109,  1.0000000000000035527,
    1.0000000000000008882,  1.0000000000000002220,  1.0000000000000000555,
    1.0000000000000000139,
};
constexpr int n_zeta = static_cast<int>(sizeof(zeta_even) / sizeof(double));

double reduce_period(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

}  // namespace

double clausen2(double theta) {
  // odd and 2*pi periodic; reduce to [0, pi]
  double t = reduce_period(theta);
  double sign = 1.0;
  if (t > M_PI) {
    t = two_pi - t;
    sign = -1.0;
  }
  if (t == 0.0) return 0.0;

  // Cl2(t) = t - t ln t + sum_n zeta(2n)/(n(2n+1)) t (t/2pi)^{2n}
  const double q = (t / two_pi) * (t / two_pi);
  double pw = q;
  double s = 0.0;
  for (int n = 1; n <= n_zeta; ++n) {
    const double term = zeta_even[n - 1] * pw / (n * (2.0 * n + 1.0));
    s += term;
    if (term < 1e-18) break;
    pw *= q;
  }
  return sign * t * (1.0 - std::log(t) + s);
}

double clausen3(double theta) {
  // even and 2*pi periodic; reduce to [0, pi]
  double t = reduce_period(theta);
  if (t > M_PI) t = two_pi - t;
  if (t == 0.0) return zeta3;

  // Cl3(t) = zeta(3) - (3/4) t^2 + (t^2/2) ln t
  //          - sum_n zeta(2n) t^{2n+2} / ((2pi)^{2n} n(2n+1)(2n+2))
  const double q = (t / two_pi) * (t / two_pi);
  double pw = q;
  double s = 0.0;
  for (int n = 1; n <= n_zeta; ++n) {
    const double term = zeta_even[n - 1] * pw / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0));
    s += term;
    if (term < 1e-18) break;
    pw *= q;
  }
  return zeta3 + t * t * (-0.75 + 0.5 * std::log(t) - s);
}

std::complex<double> polylog_unit_circle(int order, double theta) {
  if (order == 2) {
    const double t = reduce_period(theta);
    if (t < 1e-6 || t > two_pi - 1e-6)
      throw std::domain_error("polylog_unit_circle: order 2 needs theta in (1e-6, 2pi - 1e-6)");
    // Re Li2(e^{it}) = pi^2/6 - pi t/2 + t^2/4 on [0, 2pi]
    const double re = M_PI * M_PI / 6.0 - M_PI * t / 2.0 + t * t / 4.0;
    return {re, clausen2(t)};
  }
  if (order == 3) {
    const double t = reduce_period(theta);
    // Im Li3(e^{it}) = pi^2 t/6 - pi t^2/4 + t^3/12 on [0, 2pi]
    const double im = M_PI * M_PI * t / 6.0 - M_PI * t * t / 4.0 + t * t * t / 12.0;
    return {clausen3(t), im};
  }
  throw std::invalid_argument("polylog_unit_circle: order must be 2 or 3");
}

}  // namespace subchain
