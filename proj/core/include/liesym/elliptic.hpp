#pragma once

namespace liesym {

/// Complete elliptic integral of the first kind in the modulus convention,
/// K(k) = integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta), 0 <= k < 1.
/// Computed by the arithmetic-geometric mean. Throws Error outside the
/// domain.
double elliptic_K(double k);

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/// Jacobi elliptic functions of argument u and modulus k in [0, 1],
/// by the descending Landen transformation. k = 0 and k = 1 degenerate to
/// trigonometric and hyperbolic functions; tiny k^2 uses the first-order
/// expansion around them to avoid a vacuous AGM pass.
JacobiValues jacobi_elliptic(double u, double k);

}  // namespace liesym
