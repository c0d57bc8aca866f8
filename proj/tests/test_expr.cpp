#include "doctest.h"

#include "liesym/expr.hpp"
#include "liesym/poly.hpp"

#include "support.hpp"

using namespace liesym;
using namespace testsupport;

TEST_SUITE("expr") {
  TEST_CASE("default expression is the constant zero") {
    Expr e;
    CHECK(e.is_zero());
    CHECK(e.kind() == Expr::Kind::Constant);
  }

  TEST_CASE("sum factory flattens and folds constants") {
    Expr x = Expr::symbol(sym_x());
    Expr e = Expr::sum({Expr::sum({x, Expr::constant(2)}), Expr::constant(3)});
    REQUIRE(e.kind() == Expr::Kind::Sum);
    CHECK(e.operands().size() == 2);
    CHECK(equivalent(e, x + Expr::constant(5)));
  }

  TEST_CASE("empty and singleton sums collapse") {
    CHECK(Expr::sum({}).is_zero());
    Expr x = Expr::symbol(sym_x());
    CHECK(Expr::sum({x}).kind() == Expr::Kind::Var);
  }

  TEST_CASE("product factory folds constants and annihilates on zero") {
    Expr x = Expr::symbol(sym_x());
    CHECK(Expr::product({x, Expr()}).is_zero());
    Expr e = Expr::product({Expr::constant(2), x, Expr::constant(3)});
    REQUIRE(e.kind() == Expr::Kind::Product);
    CHECK(e.operands().front().constant_value() == 6);
  }

  TEST_CASE("pow folds trivial exponents and constants") {
    Expr x = Expr::symbol(sym_x());
    CHECK(Expr::pow(x, 0).is_one());
    CHECK(Expr::pow(x, 1).kind() == Expr::Kind::Var);
    CHECK(Expr::pow(Expr::constant(3), 4).constant_value() == 81);
    CHECK(Expr::pow(Expr::constant(2), -2).constant_value() == make_rational(1, 4));

    Expr nested = Expr::pow(Expr::pow(x, 2), 3);
    REQUIRE(nested.kind() == Expr::Kind::Pow);
    CHECK(nested.exponent() == 6);
  }

  TEST_CASE("construction does not distribute products over sums") {
    Expr e = E("(u + u_x)^2");
    CHECK(e.kind() == Expr::Kind::Pow);

    Poly p = expand(e);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient(Monomial::variable(U(), 2)) == 1);
    CHECK(p.coefficient(Monomial::variable(U()).times(Monomial::variable(U(1, 0)))) == 2);
    CHECK(p.coefficient(Monomial::variable(U(1, 0), 2)) == 1);
  }

  TEST_CASE("semantic equality goes through expansion") {
    CHECK(expand(E("u_x2 - u_x2")).is_zero());
    CHECK(equivalent(E("(x + t)^2"), E("x^2 + 2*x*t + t^2")));
    CHECK_FALSE(equivalent(E("x"), E("t")));
  }

  TEST_CASE("printing uses minus signs and minimal parentheses") {
    CHECK(to_string(E("u_t + a*u*u_x")) == "u_t + a*u*u_x");
    CHECK(to_string(E("x - t")) == "x - t");
    CHECK(to_string(Expr::constant(make_rational(-11, 4))) == "-11/4");
    CHECK(to_string(E("-x*t")) == "-x*t");
    CHECK(to_string(E("(x + t)^2")) == "(x + t)^2");
    CHECK(to_string(Expr::pow(Expr::symbol(param("a")), -1)) == "1/a");
    CHECK(to_string(E("x/(a*t)")) == "x/(t*a)");  // canonical variable order
    CHECK(to_string(E("x/a^2")) == "x/a^2");
  }

  TEST_CASE("printed form parses back to the same value") {
    for (const char* text : {
             "u_t + a*u*u_x + b*u_x3 + c*u_x4 + d*u_x5 - e*u_x2",
             "(u + u_x)^2 - t^3",
             "x*t*u - 7/3",
             "(x + a*c1)/(a*t)",
         }) {
      Expr e = E(text);
      CHECK(equivalent(e, E(to_string(e))));
    }
  }

  TEST_CASE("tree substitution rebuilds without expanding") {
    Expr e = E("a*(u + t)^2");
    Expr g = substitute(e, U(), E("x"));
    CHECK(g.kind() == Expr::Kind::Product);
    CHECK(equivalent(g, E("a*(x + t)^2")));
    // untouched parts share structure
    CHECK(substitute(e, PARAM("q"), E("x")).same_node(e));
  }

  TEST_CASE("depends_on sees through nesting") {
    Expr e = E("a*(u + t)^2");
    CHECK(depends_on(e, U()));
    CHECK(depends_on(e, T()));
    CHECK_FALSE(depends_on(e, X()));
    CHECK_FALSE(depends_on(e, U(1, 0)));
  }
}
