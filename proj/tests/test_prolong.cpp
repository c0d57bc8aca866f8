#include "doctest.h"

#include "liesym/errors.hpp"
#include "liesym/pde.hpp"
#include "liesym/vector_field.hpp"

#include "support.hpp"

using namespace liesym;
using namespace testsupport;

TEST_SUITE("prolong") {
  TEST_CASE("zeroth coefficient is phi itself") {
    VectorField v = field("t", "0", "1/a");
    Prolongation pr(v, 2);
    CHECK(pr.coeff_poly(0, 0) == P("1/a"));
  }

  TEST_CASE("first order coefficients, worked by hand") {
    // xi = t, eta = 0, phi = 1/a:
    //   phi^x = D_x(1/a) - u_x D_x(t) = 0
    //   phi^t = D_t(1/a) - u_x D_t(t) = -u_x
    VectorField v = field("t", "0", "1/a");
    Prolongation pr(v, 1);
    CHECK(pr.coeff_poly(1, 0).is_zero());
    CHECK(pr.coeff_poly(0, 1) == P("-u_x"));
  }

  TEST_CASE("scaling field picks up the classical weights") {
    // xi = x: phi^x = -u_x, phi^xx = -2 u_x2, phi^xxx = -3 u_x3.
    VectorField v = field("x", "0", "0");
    Prolongation pr(v, 3);
    CHECK(pr.coeff_poly(1, 0) == P("-u_x"));
    CHECK(pr.coeff_poly(2, 0) == P("-2*u_x2"));
    CHECK(pr.coeff_poly(3, 0) == P("-3*u_x3"));
  }

  TEST_CASE("u-dependent phi brings in quadratic jet terms") {
    // xi = 0, eta = 0, phi = u^2: phi^x = 2 u u_x,
    // phi^xx = 2 u_x^2 + 2 u u_x2.
    VectorField v = field("0", "0", "u^2");
    Prolongation pr(v, 2);
    CHECK(pr.coeff_poly(1, 0) == P("2*u*u_x"));
    CHECK(pr.coeff_poly(2, 0) == P("2*u_x^2 + 2*u*u_x2"));
  }

  TEST_CASE("recursion agrees with the characteristic closed form") {
    std::vector<VectorField> fields = {
        field("t", "0", "1/a"),
        field("x^2*t", "t^2", "x*u"),
        field("u", "x + t", "u^2"),
        field("a*t + x*u", "b*x", "x*t*u"),
    };
    for (const auto& v : fields) {
      Prolongation pr(v, 3);
      for (int total = 0; total <= 3; ++total) {
        for (int i = total; i >= 0; --i) {
          int j = total - i;
          CHECK(pr.coeff_poly(i, j) == prolong_coeff_characteristic(v, i, j));
        }
      }
    }
  }

  TEST_CASE("x then t builds the same coefficient as t then x") {
    // The constructor steps in x when it can; the characteristic form is
    // direction free, so equality over mixed indices already covers this.
    VectorField v = field("x*t*u", "u^2", "x + t + u");
    Prolongation pr(v, 4);
    CHECK(pr.coeff_poly(2, 2) == prolong_coeff_characteristic(v, 2, 2));
    CHECK(pr.coeff_poly(1, 3) == prolong_coeff_characteristic(v, 1, 3));
  }

  TEST_CASE("apply_prolonged differentiates along the jet space") {
    // Translations annihilate any autonomous equation outright.
    Expr delta = E("u_t + u*u_x");
    CHECK(expand(apply_prolonged(VectorField::d_x(), 1, delta)).is_zero());
    CHECK(expand(apply_prolonged(VectorField::d_t(), 1, delta)).is_zero());
    // d/du hits the u factor only.
    CHECK(equivalent(apply_prolonged(VectorField::d_u(), 1, delta), E("u_x")));
  }

  TEST_CASE("apply_prolonged rejects jets beyond the prolongation order") {
    CHECK_THROWS_AS(apply_prolonged(VectorField::d_x(), 1, E("u_x2")), OrderError);
  }

  TEST_CASE("coefficients of point fields may not involve jets") {
    VectorField bad{E("u_x"), Expr(), Expr()};
    CHECK_THROWS_AS(validate_point_field(bad), UnsupportedError);
    CHECK_THROWS_AS(Prolongation(bad, 1), UnsupportedError);
  }

  TEST_CASE("commutators of the translation algebra") {
    VectorField vx = VectorField::d_x();
    VectorField vt = VectorField::d_t();
    VectorField v3 = field("t", "0", "1/a");

    CHECK(equal_fields(commutator(vt, v3), vx));
    CHECK(equal_fields(commutator(v3, vt), scale(Rational(-1), vx)));
    CHECK(to_string(commutator(vx, vt)) == "0");
    CHECK(to_string(commutator(vx, v3)) == "0");
  }

  TEST_CASE("commutator of scalings and translations") {
    // [x d/dx, d/dx] = -d/dx
    VectorField scaling = field("x", "0", "0");
    CHECK(equal_fields(commutator(scaling, VectorField::d_x()),
                       scale(Rational(-1), VectorField::d_x())));
  }

  TEST_CASE("field printing") {
    CHECK(to_string(field("t", "0", "1/a")) == "(t) d/dx + (1/a) d/du");
    CHECK(to_string(VectorField::d_x()) == "d/dx");
    CHECK(to_string(field("0", "0", "0")) == "0");
  }
}
