#pragma once

#include "liesym/expr.hpp"
#include "liesym/symbols.hpp"

#include <string_view>

namespace liesym {

struct ParseOptions {
  int max_jet_order = kDefaultMaxJetOrder;
};

// Grammar (whitespace insignificant):
//
//   equation   :=  expr ( '=' expr )?          -- "l = r" yields l - r
//   expr       :=  term ( ('+' | '-') term )*
//   term       :=  signed ( ('*' | '/') signed )*
//   signed     :=  ('-' | '+')* power
//   power      :=  primary ( '^' exponent )?
//   exponent   :=  digits | '(' '-'? digits ')'
//   primary    :=  digits | identifier | '(' expr ')'
//
// Identifiers name the coordinates x and t, jet variables of u in either
// the compact (u, u_x, u_x3t2) or braced (u_{x^3 t^2}) spelling, or free
// parameters (a, beta, c1, ...). Numeric literals are nonnegative
// integers; rationals are written with '/'. A divisor must reduce to a
// single monomial.

/// Parses a plain expression. '=' is rejected.
Expr parse_expr(std::string_view text, const ParseOptions& opts = {});

/// Parses "lhs = rhs" into lhs - rhs, or a bare expression unchanged.
Expr parse_equation(std::string_view text, const ParseOptions& opts = {});

}  // namespace liesym
