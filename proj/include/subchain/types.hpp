#pragma once

#include <Eigen/Dense>
#include <complex>

namespace subchain {

using Complex = std::complex<double>;

/// Dipole orientation model for the pair coupling. Scalar is the
/// angle-averaged kernel; Vectorial keeps the polarization, with every
/// dipole tilted by the same angle delta from the chain axis.
enum class Model { Scalar, Vectorial };

/// Linear chain of two-level atoms. Positions are implicit,
/// z_j = d(j-1) for j = 1..n_atoms; only the lattice phase a = k0*d
/// enters any computation. All rates are in units of the single-atom
/// linewidth, all times in units of its inverse.
struct ChainConfig {
  int n_atoms = 1;
  double a = 1.0;                // k0*d, radians, > 0
  Model model = Model::Scalar;
  double delta = 0.0;            // dipole angle, radians in [0, pi/2]

  void validate() const;

  static ChainConfig scalar(int n, double a);
  static ChainConfig vectorial(int n, double a, double delta);
};

/// Pair kernel value split into decay and shift parts,
/// G = decay - i*shift (units of the single-atom rate).
struct ComplexRate {
  double decay = 0.0;
  double shift = 0.0;

  Complex g() const { return {decay, -shift}; }
};

/// Single-excitation wavefunction in the site basis at a given time.
struct DipoleState {
  Eigen::VectorXcd beta;
  double time = 0.0;

  int size() const { return static_cast<int>(beta.size()); }
  double norm2() const { return beta.squaredNorm(); }
  bool finite() const { return beta.allFinite(); }
};

}  // namespace subchain
