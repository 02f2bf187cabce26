#pragma once

#include "subchain/types.hpp"

namespace subchain {

/// sin(x)/x with the removable singularity handled by a short Taylor
/// series near zero.
double sinc(double x);

/// Spherical Bessel functions j0 and j1.
double sphbessel_j0(double x);
double sphbessel_j1(double x);

/// Dipole angle at which the vectorial kernel collapses onto the scalar
/// one, acos(1/sqrt(3)).
extern const double magic_angle;

/// Scalar pair kernel at dimensionless separation r = k0*|z_j - z_m|.
/// r = 0 is the diagonal case (decay 1, shift 0); r > 0 gives
/// (sin r / r, cos r / r).
ComplexRate scalar_kernel(double r);

/// Vectorial pair kernel for dipoles tilted by delta from the chain
/// axis; off-diagonal only (r > 0).
ComplexRate vector_kernel(double r, double delta);

/// Kernel dispatch on the configured model; r > 0.
ComplexRate pair_kernel(const ChainConfig& cfg, double r);

/// N x N complex symmetric coupling matrix, entry (j,m) = G(a|j-m|)
/// with unit diagonal.
Eigen::MatrixXcd coupling_matrix(const ChainConfig& cfg);

}  // namespace subchain
