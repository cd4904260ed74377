#ifndef CVXFT_SPECIAL_HPP
#define CVXFT_SPECIAL_HPP

// Scalar special functions used by the closed-form transforms.
// Self-contained (no external special-function dependency); accuracy targets
// are set by the herz-vs-closed oracle comparisons at 1e-8.

namespace cvxft {

// sin(pi*x), cos(pi*x) with exact argument reduction: sin_pi(n) == 0 exactly
// for integer n. Needed so that lattice orthogonality certificates are exact.
double sin_pi(double x);
double cos_pi(double x);

// sin(2*pi*s*t)/(pi*t), the 1-d cube factor, with the removable singularity 2s at t=0.
double cube_factor(double s, double t);

// Bessel J1. Power series for z < 12, Hankel asymptotic expansion above,
// optimally truncated; abs error <= ~9e-13 on the switch point and beyond.
double bessel_j1(double z);

// (sin z - z cos z), with series for small z (relative accuracy near 0).
double sin_minus_zcos(double z);

} // namespace cvxft

#endif
