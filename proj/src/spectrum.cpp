#include "subchain/spectrum.hpp"

#include "subchain/kernels.hpp"
#include "subchain/parallel.hpp"
#include "subchain/polylog.hpp"
#include "subchain/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subchain {

namespace {

constexpr double gamma_clamp = 1e-9;

double edge_distance(const std::vector<double>& pts, double a) {
  double d = std::numeric_limits<double>::infinity();
  for (double x : pts) d = std::min({d, std::abs(x - a), std::abs(x + a)});
  return d;
}

double clamp_gamma(double g) {
  if (g >= 0.0) return g;
  if (g >= -gamma_clamp) return 0.0;
  throw std::runtime_error("spectrum: decay rate negative beyond round-off tolerance");
}

}  // namespace

double SpectralGrid::step() const {
  if (points.size() < 2) return 0.0;
  return points[1] - points[0];
}

SpectralGrid SpectralGrid::uniform(int n_points, double a) {
  if (n_points < 2) throw std::invalid_argument("SpectralGrid: need at least 2 points");
  SpectralGrid g;
  g.points.resize(n_points);
  const double h = 2.0 * M_PI / n_points;
  for (int i = 0; i < n_points; ++i) g.points[i] = -M_PI + (i + 0.5) * h;
  g.edge_offset = edge_distance(g.points, a);
  return g;
}

SpectralGrid SpectralGrid::from_points(std::vector<double> pts, double a) {
  if (pts.size() < 2) throw std::invalid_argument("SpectralGrid: need at least 2 points");
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (!(pts[i] < pts[i + 1]))
      throw std::invalid_argument("SpectralGrid: points must be strictly increasing");
  if (pts.front() <= -M_PI - 1e-12 || pts.back() > M_PI + 1e-12)
    throw std::invalid_argument("SpectralGrid: points must lie in (-pi, pi]");
  SpectralGrid g;
  g.points = std::move(pts);
  g.edge_offset = edge_distance(g.points, a);
  return g;
}

double gamma_exact_with_matrix(const Eigen::MatrixXd& decay_part, double x) {
  const int n = static_cast<int>(decay_part.rows());
  Eigen::VectorXd vr(n), vi(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    vr[j] = scale * std::cos(x * j);
    vi[j] = scale * std::sin(x * j);
  }
  return vr.dot(decay_part * vr) + vi.dot(decay_part * vi);
}

double gamma_exact(const ChainConfig& cfg, double x) {
  const Eigen::MatrixXd decay_part = coupling_matrix(cfg).real();
  return clamp_gamma(gamma_exact_with_matrix(decay_part, x));
}

double gamma_sinc_approx(const ChainConfig& cfg, double x) {
  cfg.validate();
  const int n = cfg.n_atoms;
  const double a = cfg.a;
  const double lo = 0.5 * (x - a);
  const double hi = 0.5 * (x + a);
  const double pad = 40.0 * M_PI / n;
  const int m_min = static_cast<int>(std::ceil((lo - pad) / M_PI));
  const int m_max = static_cast<int>(std::floor((hi + pad) / M_PI));

  const bool vectorial = cfg.model == Model::Vectorial;
  const double s2 = std::sin(cfg.delta) * std::sin(cfg.delta);
  const double q = 1.0 - 3.0 * std::cos(cfg.delta) * std::cos(cfg.delta);

  double total = 0.0;
  for (int m = m_min; m <= m_max; ++m) {
    const double center = m * M_PI;
    auto integrand = [&](double t) {
      const double s = sinc((t - center) * n);
      double w = 1.0;
      if (vectorial) {
        const double u = x - 2.0 * t;
        w = 1.5 * (s2 + 0.5 * q * (u * u - a * a) / (a * a));
      }
      return w * s * s;
    };
    // pre-split at the sinc zeros t = m pi + k pi/N
    std::vector<double> zeros;
    const int k_lo = static_cast<int>(std::ceil((lo - center) * n / M_PI));
    const int k_hi = static_cast<int>(std::floor((hi - center) * n / M_PI));
    for (int k = k_lo; k <= k_hi; ++k) zeros.push_back(center + k * M_PI / n);
    total += integrate_with_breakpoints(integrand, lo, hi, std::move(zeros), 1e-8);
  }
  return clamp_gamma(total * n / a);
}

double omega_finite(const ChainConfig& cfg, double x) {
  cfg.validate();
  const int n = cfg.n_atoms;
  double s = 0.0;
  for (int l = 1; l < n; ++l)
    s += (n - l) * pair_kernel(cfg, cfg.a * l).shift * std::cos(x * l);
  return 2.0 * s / n;
}

LightLineValue gamma_infinite(double a, double x, Model model, double delta) {
  if (!(a > 0.0 && a < M_PI)) throw std::invalid_argument("gamma_infinite: need 0 < a < pi");
  if (std::abs(x) > M_PI + 1e-12) throw std::invalid_argument("gamma_infinite: |x| must be <= pi");
  LightLineValue out;
  const double ax = std::abs(x);
  out.at_light_line = std::abs(ax - a) < 1e-12;
  if (out.at_light_line || ax >= a) return out;  // rectangular function, open interval
  if (model == Model::Scalar) {
    out.value = M_PI / a;
  } else {
    const double s2 = std::sin(delta) * std::sin(delta);
    const double q = 1.0 - 3.0 * std::cos(delta) * std::cos(delta);
    out.value = (1.5 * M_PI / a) * (s2 + 0.5 * q * (x * x - a * a) / (a * a));
  }
  return out;
}

double omega_infinite(double a, double x, Model model, double delta) {
  if (!(a > 0.0 && a < M_PI)) throw std::invalid_argument("omega_infinite: need 0 < a < pi");
  if (std::abs(x) > M_PI + 1e-12) throw std::invalid_argument("omega_infinite: |x| must be <= pi");
  const double s2 = std::sin(delta) * std::sin(delta);
  const bool has_log = model == Model::Scalar || s2 > 0.0;
  if (has_log && std::abs(std::abs(x) - a) < 1e-6)
    throw std::domain_error("omega_infinite: logarithmic singularity at x = +-a");

  const double log_term = has_log
      ? std::log(2.0 * std::abs(std::cos(a) - std::cos(x)))
      : 0.0;
  if (model == Model::Scalar) return -log_term / a;

  const double q = 3.0 * std::cos(delta) * std::cos(delta) - 1.0;
  const double li_part =
      a * (clausen2(x + a) - clausen2(x - a)) + clausen3(x + a) + clausen3(x - a);
  return (1.5 / (a * a * a)) * (-a * a * s2 * log_term + q * li_part);
}

SpectrumResult evaluate_spectrum(const ChainConfig& cfg,
                                 const SpectralGrid& grid,
                                 SpectrumMethod method) {
  cfg.validate();
  SpectrumResult out;
  out.grid = grid;
  out.chain = cfg;
  out.method = method;
  const int n = grid.size();
  out.gamma.resize(n);
  out.omega.resize(n);

  if (method == SpectrumMethod::ExactSum) {
    const Eigen::MatrixXd decay_part = coupling_matrix(cfg).real();
    parallel_for(n, [&](int i) {
      out.gamma[i] = clamp_gamma(gamma_exact_with_matrix(decay_part, grid.points[i]));
      out.omega[i] = omega_finite(cfg, grid.points[i]);
    });
  } else if (method == SpectrumMethod::SincApprox) {
    parallel_for(n, [&](int i) {
      out.gamma[i] = gamma_sinc_approx(cfg, grid.points[i]);
      out.omega[i] = omega_finite(cfg, grid.points[i]);
    });
  } else {
    parallel_for(n, [&](int i) {
      out.gamma[i] = gamma_infinite(cfg.a, grid.points[i], cfg.model, cfg.delta).value;
      out.omega[i] = omega_infinite(cfg.a, grid.points[i], cfg.model, cfg.delta);
    });
  }
  return out;
}

}  // namespace subchain
