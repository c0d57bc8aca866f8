#pragma once

#include "liesym/rational.hpp"
#include "liesym/symbols.hpp"

#include <memory>
#include <string>
#include <vector>

namespace liesym {

/// Immutable expression tree over rational constants, the coordinates x, t,
/// jet variables of u, named parameters, sums, products, and integer powers.
/// Nodes are shared: copying an Expr copies a pointer.
///
/// The factories normalize locally. Sums and products flatten one level,
/// constants fold, a zero factor collapses the product, trivial wrappers
/// disappear. They never distribute a product over a sum and never combine
/// like terms; expand() in poly.hpp does that globally.
class Expr {
public:
  enum class Kind { Constant, Var, Sum, Product, Pow };

  /// The constant zero.
  Expr();

  static Expr constant(Rational value);
  static Expr constant(long value);
  static Expr variable(VarRef v);
  static Expr symbol(Symbol s) { return variable(VarRef(std::move(s))); }
  static Expr jet(JetVar v) { return variable(VarRef(v)); }
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr pow(Expr base, int exponent);

  Kind kind() const;
  const Rational& constant_value() const;     // Kind::Constant only
  const VarRef& var() const;                  // Kind::Var only
  const std::vector<Expr>& operands() const;  // Sum and Product only
  const Expr& base() const;                   // Kind::Pow only
  int exponent() const;                       // Kind::Pow only

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_zero() const;
  bool is_one() const;

  /// Pointer identity of the root node. Not semantic equality; use
  /// expand() for that.
  bool same_node(const Expr& o) const { return node_ == o.node_; }

  /// Opaque; defined in expr.cpp only.
  struct Node;

private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);

/// Infix rendering with minimal parentheses, re-parseable by the parser.
/// Deterministic for a given tree.
std::string to_string(const Expr& e);

}  // namespace liesym
