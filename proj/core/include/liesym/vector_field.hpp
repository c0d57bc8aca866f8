#pragma once

#include "liesym/expr.hpp"
#include "liesym/poly.hpp"
#include "liesym/symbols.hpp"

#include <map>
#include <string>
#include <utility>

namespace liesym {

/// Point symmetry generator xi*d/dx + eta*d/dt + phi*d/du. Coefficients
/// may involve x, t, u and parameters, never proper derivatives of u.
struct VectorField {
  Expr xi;
  Expr eta;
  Expr phi;

  static VectorField d_x();
  static VectorField d_t();
  static VectorField d_u();
};

/// Throws UnsupportedError when a coefficient touches u_x, u_t, ...
void validate_point_field(const VectorField& v);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField scale(const Expr& c, const VectorField& v);
VectorField scale(const Rational& c, const VectorField& v);

/// Componentwise semantic equality.
bool equal_fields(const VectorField& a, const VectorField& b);

/// "(xi) d/dx + (eta) d/dt + (phi) d/du" with zero components dropped;
/// the zero field prints "0".
std::string to_string(const VectorField& v);

/// Applies v to a function of (x, t, u) as a first-order operator.
Expr apply_field(const VectorField& v, const Expr& f);

/// Lie bracket [a, b] = a b - b a, again a point field.
VectorField commutator(const VectorField& a, const VectorField& b);

/// Coefficients of the prolongation of a generator to a given jet order,
/// built with the standard recursion
///   phi^{J,i} = D_i(phi^J) - D_i(xi) u_{J,x} - D_i(eta) u_{J,t}.
/// coeff(i, j) multiplies d/du_{x^i t^j}; coeff(0, 0) is phi.
class Prolongation {
public:
  Prolongation(VectorField v, int order, int max_jet_order = kDefaultMaxJetOrder);

  const Poly& coeff_poly(int dx, int dt) const;
  Expr coeff(int dx, int dt) const;
  int order() const { return order_; }
  const VectorField& base() const { return base_; }

private:
  VectorField base_;
  int order_;
  std::map<std::pair<int, int>, Poly> coeffs_;
};

/// Pr^(order)(v) applied to f on the jet space. f may not contain jets
/// beyond `order`.
Expr apply_prolonged(const VectorField& v, int order, const Expr& f,
                     int max_jet_order = kDefaultMaxJetOrder);
Poly apply_prolonged(const Prolongation& pr, const Poly& f, int max_jet_order = kDefaultMaxJetOrder);

}  // namespace liesym
