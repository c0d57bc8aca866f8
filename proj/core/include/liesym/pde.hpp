#pragma once

#include "liesym/parser.hpp"
#include "liesym/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace liesym {

/// Scalar evolution equation u_t + F(x, t, u, u_x, ..., u_xn) = 0 in one
/// space dimension. Construction normalizes the u_t coefficient to one and
/// rejects anything with higher or mixed t-derivatives, u_t-dependent
/// coefficients, or a non-constant u_t coefficient.
class EvolutionPDE {
public:
  static EvolutionPDE from_expression(const Expr& delta, int max_jet_order = kDefaultMaxJetOrder);
  static EvolutionPDE parse(std::string_view text, const ParseOptions& opts = {});

  /// u_t + F, expanded. The equation is delta = 0.
  const Poly& delta() const { return delta_; }
  Expr delta_expr() const { return to_expr(delta_); }

  /// Right-hand side of the solved form u_t = -F.
  const Poly& rhs() const { return rhs_; }
  Expr rhs_expr() const { return to_expr(rhs_); }

  /// Highest derivative order present (u_t counts, so at least 1).
  int order() const { return order_; }

  /// Free parameters, sorted by name.
  std::vector<Symbol> parameters() const;

  /// Same equation with parameters replaced by exact values. Every
  /// parameter of the equation must be present; extra entries are ignored.
  EvolutionPDE instantiated(const std::map<std::string, Rational>& values) const;

private:
  EvolutionPDE() = default;

  Poly delta_;
  Poly rhs_;
  int order_ = 1;
};

/// Rewrites t-derivatives of u through the solved form: u_t becomes the
/// right-hand side, u_{x^i t} becomes D_x^i of it, and so on, innermost
/// first. Memoizes per equation, so keep one instance when reducing many
/// polynomials against the same PDE.
class JetReducer {
public:
  explicit JetReducer(const EvolutionPDE& pde, int max_jet_order = kDefaultMaxJetOrder);

  /// The substituted polynomial; free of t-derivatives.
  Poly reduce(const Poly& p);

  /// What u_{x^dx t^dt} equals on solutions (dt >= 1).
  const Poly& solved_jet(int dx, int dt);

private:
  Poly rhs_;
  int max_order_;
  std::map<std::pair<int, int>, Poly> memo_;
};

Poly reduce_mod_equation(const Poly& p, const EvolutionPDE& pde,
                         int max_jet_order = kDefaultMaxJetOrder);
Expr reduce_mod_equation(const Expr& e, const EvolutionPDE& pde,
                         int max_jet_order = kDefaultMaxJetOrder);

}  // namespace liesym
