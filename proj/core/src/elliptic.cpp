#include "liesym/elliptic.hpp"

#include "liesym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace liesym {

double elliptic_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw Error("elliptic_K needs 0 <= k < 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - k * k);
  // Quadratic convergence; the gap bottoms out at rounding level after a
  // handful of steps, so iterate to that level with a hard cap.
  for (int i = 0; i < 32 && std::abs(a - b) > 4 * std::numeric_limits<double>::epsilon() * a;
       ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

JacobiValues jacobi_elliptic(double u, double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error("jacobi_elliptic needs 0 <= k <= 1");

  const double m = k * k;
  if (m < 1e-8) {
    // First correction in m around the circular case.
    double s = std::sin(u);
    double c = std::cos(u);
    double w = 0.25 * m * (u - s * c);
    return {s - w * c, c + w * s, 1.0 - 0.5 * m * s * s};
  }
  if (1.0 - m < 1e-12) {
    double s = std::tanh(u);
    double c = 1.0 / std::cosh(u);
    return {s, c, c};
  }

  // AGM ladder a_n, b_n, c_n, then unwind the amplitude.
  std::vector<double> as{1.0};
  std::vector<double> cs{k};
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  while (static_cast<int>(cs.size()) < 32 &&
         cs.back() > 4 * std::numeric_limits<double>::epsilon() * as.back()) {
    double an = 0.5 * (a + b);
    double cn = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    as.push_back(a);
    cs.push_back(cn);
  }

  const int n = static_cast<int>(as.size()) - 1;
  double phi = std::ldexp(as[n] * u, n);
  for (int i = n; i >= 1; --i) {
    phi = 0.5 * (phi + std::asin(std::clamp(cs[i] / as[i] * std::sin(phi), -1.0, 1.0)));
  }

  double sn = std::sin(phi);
  double cn = std::cos(phi);
  // dn >= k' > 0 for real arguments, so the identity root is safe; the
  // angle-quotient form degenerates to 0/0 at the quarter period.
  double dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

}  // namespace liesym
