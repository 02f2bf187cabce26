#pragma once

#include "subchain/types.hpp"

#include <vector>

namespace subchain {

enum class Axis { X, Y, Z };

/// Raster plane for intensity maps, all lengths in units of d.
/// In-plane axes: normal X -> (u,v) = (y,z); Y -> (x,z); Z -> (x,y).
struct PlaneSpec {
  Axis normal = Axis::X;
  double offset = 5.0;
  double u_min = -20.0, u_max = 20.0;
  double v_min = -20.0, v_max = 20.0;
  int resolution = 200;

  void validate(const ChainConfig& cfg) const;
  Eigen::Vector3d point(double u, double v) const;
};

/// Radiated intensity raster, arbitrary units, row-major with v as the
/// slow index: intensity[iv * resolution + iu].
struct FieldMap {
  PlaneSpec plane;
  std::vector<double> intensity;

  double max_value() const;
};

/// Scattered field at a point (units of d), full dyadic kernel summed
/// over the chain; physical prefactor dropped. Throws if the point is
/// within 1e-6 d of an atom.
Eigen::Vector3cd field_at_point(const Eigen::Vector3d& r,
                                const DipoleState& state,
                                const ChainConfig& cfg,
                                const Eigen::Vector3d& dipole_axis);

FieldMap intensity_map(const PlaneSpec& plane, const DipoleState& state,
                       const ChainConfig& cfg,
                       const Eigen::Vector3d& dipole_axis);

/// |sum_j e^{-i a cos(theta) (j-1)} beta_j|^2, optionally times the
/// transverse polarization factor 1 - (n.e)^2 evaluated in the phi = 0
/// plane.
double far_field_intensity(double theta, const DipoleState& state,
                           const ChainConfig& cfg,
                           bool include_polarization_factor = false,
                           const Eigen::Vector3d& dipole_axis =
                               Eigen::Vector3d::UnitX());

/// Mean intensity next to the chain (transverse offset 5d, z within the
/// chain extent) over mean intensity past the chain ends. Large for
/// transversely radiating states, below one when the field escapes at
/// the ends.
double evanescence_ratio(const DipoleState& state, const ChainConfig& cfg);

}  // namespace subchain
