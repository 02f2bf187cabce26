#include "subchain/radiation.hpp"

#include "subchain/dickespace.hpp"
#include "subchain/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subchain {

namespace {

constexpr double min_atom_distance = 1e-6;  // units of d

Eigen::Vector3d atom_position(int j) { return {0.0, 0.0, static_cast<double>(j)}; }

}  // namespace

void PlaneSpec::validate(const ChainConfig& cfg) const {
  if (resolution < 2)
    throw std::invalid_argument("PlaneSpec: resolution must be >= 2");
  if (!(u_max > u_min) || !(v_max > v_min))
    throw std::invalid_argument("PlaneSpec: empty range");
  // distance from the plane to the nearest atom (atoms sit on the z axis)
  double dist = std::numeric_limits<double>::infinity();
  for (int j = 0; j < cfg.n_atoms; ++j) {
    const double z = static_cast<double>(j);
    switch (normal) {
      case Axis::X:
      case Axis::Y:
        dist = std::min(dist, std::abs(offset));
        break;
      case Axis::Z:
        dist = std::min(dist, std::abs(offset - z));
        break;
    }
  }
  if (dist < min_atom_distance)
    throw std::invalid_argument("PlaneSpec: plane intersects an atom position");
}

Eigen::Vector3d PlaneSpec::point(double u, double v) const {
  switch (normal) {
    case Axis::X: return {offset, u, v};
    case Axis::Y: return {u, offset, v};
    default:      return {u, v, offset};
  }
}

double FieldMap::max_value() const {
  double m = 0.0;
  for (double v : intensity) m = std::max(m, v);
  return m;
}

Eigen::Vector3cd field_at_point(const Eigen::Vector3d& r,
                                const DipoleState& state,
                                const ChainConfig& cfg,
                                const Eigen::Vector3d& dipole_axis) {
  cfg.validate();
  if (state.size() != cfg.n_atoms)
    throw std::invalid_argument("field_at_point: state size does not match chain");
  const Eigen::Vector3d e = dipole_axis.normalized();

  Eigen::Vector3cd field = Eigen::Vector3cd::Zero();
  for (int j = 0; j < cfg.n_atoms; ++j) {
    const Eigen::Vector3d sep = r - atom_position(j);
    const double dist = sep.norm();
    if (dist < min_atom_distance)
      throw std::domain_error("field_at_point: observation point on top of an atom");
    const double rho = cfg.a * dist;  // k0 * separation
    const Eigen::Vector3d n = sep / dist;
    const double ne = n.dot(e);

    const Complex spherical = std::polar(1.0, rho) / Complex(0.0, rho);
    const Complex near_field = Complex(0.0, 1.0) / rho - 1.0 / (rho * rho);
    const Eigen::Vector3d transverse = e - ne * n;     // (1 - nn).e
    const Eigen::Vector3d longitudinal = e - 3.0 * ne * n;

    field += (1.5 * spherical * state.beta[j]) *
             (transverse.cast<Complex>() + near_field * longitudinal.cast<Complex>());
  }
  return field;
}

FieldMap intensity_map(const PlaneSpec& plane, const DipoleState& state,
                       const ChainConfig& cfg,
                       const Eigen::Vector3d& dipole_axis) {
  plane.validate(cfg);
  FieldMap map;
  map.plane = plane;
  const int res = plane.resolution;
  map.intensity.assign(static_cast<std::size_t>(res) * res, 0.0);
  const double du = (plane.u_max - plane.u_min) / (res - 1);
  const double dv = (plane.v_max - plane.v_min) / (res - 1);

  parallel_for(res, [&](int iv) {
    const double v = plane.v_min + iv * dv;
    for (int iu = 0; iu < res; ++iu) {
      const double u = plane.u_min + iu * du;
      const Eigen::Vector3cd f =
          field_at_point(plane.point(u, v), state, cfg, dipole_axis);
      map.intensity[static_cast<std::size_t>(iv) * res + iu] = f.squaredNorm();
    }
  });
  return map;
}

double far_field_intensity(double theta, const DipoleState& state,
                           const ChainConfig& cfg,
                           bool include_polarization_factor,
                           const Eigen::Vector3d& dipole_axis) {
  if (theta < 0.0 || theta > M_PI)
    throw std::invalid_argument("far_field_intensity: theta must lie in [0, pi]");
  double value = std::norm(amplitude(state, cfg.a * std::cos(theta)));
  if (include_polarization_factor) {
    const Eigen::Vector3d n(std::sin(theta), 0.0, std::cos(theta));
    const double ne = n.dot(dipole_axis.normalized());
    value *= 1.0 - ne * ne;
  }
  return value;
}

double evanescence_ratio(const DipoleState& state, const ChainConfig& cfg) {
  cfg.validate();
  const double z_end = cfg.n_atoms - 1;
  const double transverse = 5.0;  // units of d
  const double gap = 2.0;
  const double extent = 10.0;
  const int samples = 200;
  const Eigen::Vector3d axis = Eigen::Vector3d::UnitX();

  auto strip_mean = [&](const Eigen::Vector3d& p0, const Eigen::Vector3d& p1) {
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
      const Eigen::Vector3d p = p0 + (p1 - p0) * ((i + 0.5) / samples);
      acc += field_at_point(p, state, cfg, axis).squaredNorm();
    }
    return acc / samples;
  };

  // side strip at transverse distance 5d, perpendicular to both the chain
  // and the dipole axis; end caps on the axis past each end
  const double side = strip_mean({0.0, transverse, 0.0}, {0.0, transverse, z_end});
  const double ends =
      0.5 * (strip_mean({0.0, 0.0, z_end + gap}, {0.0, 0.0, z_end + gap + extent}) +
             strip_mean({0.0, 0.0, -gap}, {0.0, 0.0, -gap - extent}));
  if (ends == 0.0 && side == 0.0) return 1.0;  // zero state
  return side / ends;
}

}  // namespace subchain
