#pragma once

#include <complex>

namespace subchain {

/// Clausen-type sums on the unit circle, 2*pi periodic in theta:
///   clausen2(t) = sum_{l>=1} sin(l t)/l^2   (odd)
///   clausen3(t) = sum_{l>=1} cos(l t)/l^3   (even)
/// Evaluated by the log-Taylor expansion with even-zeta coefficients
/// after range reduction; absolute error below 1e-14.
double clausen2(double theta);
double clausen3(double theta);

/// Li_order(e^{i theta}) for order 2 or 3. The real/imaginary parts that
/// reduce to Bernoulli polynomials are closed form; the remaining parts
/// are the Clausen sums above. Order 2 is restricted to
/// theta in (1e-6, 2*pi - 1e-6); order 3 accepts any theta.
std::complex<double> polylog_unit_circle(int order, double theta);

}  // namespace subchain
