#pragma once

#include <string>
#include <variant>

namespace liesym {

/// Hard cap applied when no explicit jet order limit is given. High enough
/// for fifth-order equations: eliminating a mixed derivative like u_x4t
/// pushes pure-x jets up to order 9 before things settle.
inline constexpr int kDefaultMaxJetOrder = 10;

enum class SymbolKind {
  Independent,  // one of the base coordinates x, t
  Parameter,    // free constant: equation coefficients, ODE variables, eps, ...
};

/// A named scalar. The dependent variable u and its derivatives are NOT
/// symbols; they are JetVars.
struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::Parameter;

  bool operator==(const Symbol& o) const { return name == o.name && kind == o.kind; }
};

Symbol sym_x();
Symbol sym_t();
Symbol param(std::string name);

/// Derivative coordinate of the single dependent variable:
/// dx = i, dt = j names u_{x^i t^j}. (0, 0) is u itself.
struct JetVar {
  int dx = 0;
  int dt = 0;

  int order() const { return dx + dt; }
  bool operator==(const JetVar& o) const { return dx == o.dx && dt == o.dt; }
};

/// Canonical spelling: "u", "u_x", "u_t", "u_x2", "u_xt", "u_x2t3", ...
std::string jet_name(const JetVar& v);

using VarRef = std::variant<Symbol, JetVar>;

/// Total order over all variables used for monomial layout everywhere:
///   x < t < jets < parameters.
/// Jets are graded by total order; among equal orders the one with more
/// x-derivatives comes first. Parameters sort by name. Returns <0, 0, >0.
int compare_vars(const VarRef& a, const VarRef& b);

struct VarLess {
  bool operator()(const VarRef& a, const VarRef& b) const { return compare_vars(a, b) < 0; }
};

inline bool vars_equal(const VarRef& a, const VarRef& b) { return compare_vars(a, b) == 0; }

std::string var_name(const VarRef& v);

bool is_independent(const VarRef& v);
bool is_parameter(const VarRef& v);
bool is_jet(const VarRef& v);

}  // namespace liesym
