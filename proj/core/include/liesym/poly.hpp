#pragma once

#include "liesym/expr.hpp"
#include "liesym/rational.hpp"
#include "liesym/symbols.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

/// Power product of variables with nonzero integer exponents, kept sorted
/// by the global variable order. Negative exponents are allowed, which is
/// what lets polynomials carry things like 1/(a*t) exactly.
class Monomial {
public:
  using Factors = std::vector<std::pair<VarRef, int>>;

  Monomial() = default;  // the monomial 1
  static Monomial variable(VarRef v, int exp = 1);

  int exponent_of(const VarRef& v) const;
  Monomial times(const Monomial& o) const;
  Monomial pow(int e) const;
  Monomial without(const VarRef& v) const;

  /// Sum of all exponents (the grade used by the term order).
  int total_degree() const;
  bool is_one() const { return factors_.empty(); }
  bool has_negative_exponent() const;
  const Factors& factors() const { return factors_; }

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

  std::string str() const;

private:
  Factors factors_;
};

/// Graded order, then factor-by-factor comparison. Any strict total order
/// would do for the term map; this one keeps printouts stable.
int compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

/// Laurent polynomial: finite rational combination of monomials. This is
/// the canonical expanded form; two expressions are semantically equal
/// exactly when their expansions are identical term maps.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;  // zero
  static Poly constant(Rational c);
  static Poly variable(VarRef v, int exp = 1);
  static Poly term(Rational c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  /// Exact power. Negative exponents require a single-term polynomial.
  Poly pow(int e) const;

  /// Replaces every occurrence of v. A negative exponent on v requires the
  /// replacement to be a single term (so it can be inverted exactly).
  Poly substituted(const VarRef& v, const Poly& replacement) const;

  /// Generic derivation: extends v -> image(v) by linearity and the
  /// Leibniz rule. Both partial and total derivatives, and the chain rule
  /// pass of the reducer, are instances of this.
  Poly derived(const std::function<Poly(const VarRef&)>& image) const;

  double eval_double(const std::function<double(const VarRef&)>& env) const;
  Rational eval_rational(const std::function<Rational(const VarRef&)>& env) const;

  bool depends_on(const VarRef& v) const;
  std::vector<VarRef> variables() const;

  /// Highest total jet order appearing, or -1 when u-free.
  int max_jet_order() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, Poly p);

/// Multiplies everything out over the monomial basis. Throws
/// UnsupportedError on a negative power of anything that is not a single
/// term, since general fractions have no home here.
Poly expand(const Expr& e);

/// Canonical tree form of an expansion: terms in map order, constants
/// leading each product.
Expr to_expr(const Poly& p);

/// num/den as an expression tree. The denominator must expand to a single
/// term; the numerator is kept unexpanded.
Expr divide(const Expr& num, const Expr& den);

/// Semantic equality via expansion.
bool equivalent(const Expr& a, const Expr& b);

Poly diff_partial(const Poly& p, const VarRef& v);
Expr diff_partial(const Expr& e, const VarRef& v);

enum class Direction { X, T };

/// Total derivative on the jet space: the base coordinate moves and every
/// jet variable steps up in the given direction. Exceeding max_order
/// throws OrderError.
Poly total_derivative(const Poly& p, Direction dir, int max_order = kDefaultMaxJetOrder);
Expr total_derivative(const Expr& e, Direction dir, int max_order = kDefaultMaxJetOrder);

/// Tree-level substitution: replaces the variable wherever it occurs and
/// rebuilds enclosing nodes, without expanding anything.
Expr substitute(const Expr& e, const VarRef& target, const Expr& replacement);

bool depends_on(const Expr& e, const VarRef& v);

}  // namespace liesym
