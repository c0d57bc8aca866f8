#pragma once

// Shared helpers for the test suites: short constructors, an independent
// closed-form for prolongation coefficients, random polynomial generation,
// and span comparison for sets of vector fields.

#include "liesym/linear.hpp"
#include "liesym/parser.hpp"
#include "liesym/poly.hpp"
#include "liesym/vector_field.hpp"

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace liesym;

inline Expr E(const std::string& text) { return parse_expr(text); }
inline Poly P(const std::string& text) { return expand(parse_expr(text)); }

inline VarRef X() { return VarRef(sym_x()); }
inline VarRef T() { return VarRef(sym_t()); }
inline VarRef U(int dx = 0, int dt = 0) { return VarRef(JetVar{dx, dt}); }
inline VarRef PARAM(const std::string& name) { return VarRef(param(name)); }

inline VectorField field(const std::string& xi, const std::string& eta, const std::string& phi) {
  return VectorField{E(xi), E(eta), E(phi)};
}

// Independent check for prolongation coefficients: the characteristic form
//   phi^J = D_J(phi - xi*u_x - eta*u_t) + xi*u_{J,x} + eta*u_{J,t}
// computed with total derivatives only, no recursion over lower J.
inline Poly prolong_coeff_characteristic(const VectorField& v, int i, int j,
                                         int max_order = kDefaultMaxJetOrder) {
  Poly q = expand(v.phi);
  q -= expand(v.xi) * Poly::variable(U(1, 0));
  q -= expand(v.eta) * Poly::variable(U(0, 1));
  for (int k = 0; k < i; ++k) q = total_derivative(q, Direction::X, max_order);
  for (int k = 0; k < j; ++k) q = total_derivative(q, Direction::T, max_order);
  q += expand(v.xi) * Poly::variable(U(i + 1, j));
  q += expand(v.eta) * Poly::variable(U(i, j + 1));
  return q;
}

// Random sparse polynomial over x, t, u, jets up to the given order, and
// the parameters a, b. Exponents stay small and nonnegative.
inline Poly random_poly(std::mt19937& rng, int max_jet = 2, int max_terms = 5) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  std::vector<VarRef> vars = {X(), T(), U(0, 0), PARAM("a"), PARAM("b")};
  for (int i = 0; i <= max_jet; ++i) {
    for (int j = 0; i + j <= max_jet; ++j) {
      if (i + j > 0) vars.push_back(U(i, j));
    }
  }
  Poly p;
  int terms = 1 + pick(max_terms);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    int nfac = pick(4);
    for (int f = 0; f < nfac; ++f) {
      m = m.times(Monomial::variable(vars[pick(static_cast<int>(vars.size()))], 1 + pick(2)));
    }
    int num = pick(11) - 5;
    int den = 1 + pick(4);
    p += Poly::term(make_rational(num, den), m);
  }
  return p;
}

// True when the two sets of point fields span the same space over the
// rationals. Fields are flattened onto the union of their monomials and
// compared by matrix rank.
struct ComponentMonomialLess {
  bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return compare_monomials(a.second, b.second) < 0;
  }
};

inline bool same_span(const std::vector<VectorField>& lhs, const std::vector<VectorField>& rhs) {
  std::map<std::pair<int, Monomial>, int, ComponentMonomialLess> index;

  auto expanded = [](const VectorField& v) {
    return std::array<Poly, 3>{expand(v.xi), expand(v.eta), expand(v.phi)};
  };
  for (const auto* set : {&lhs, &rhs}) {
    for (const auto& v : *set) {
      auto comps = expanded(v);
      for (int c = 0; c < 3; ++c) {
        for (const auto& [m, coeff] : comps[c].terms()) {
          index.emplace(std::pair{c, m}, 0);
        }
      }
    }
  }
  int next = 0;
  for (auto& [key, id] : index) id = next++;

  auto to_row = [&](const VectorField& v) {
    Row r(index.size(), Rational(0));
    auto comps = expanded(v);
    for (int c = 0; c < 3; ++c) {
      for (const auto& [m, coeff] : comps[c].terms()) {
        r[index.at({c, m})] = coeff;
      }
    }
    return r;
  };

  Matrix base;
  for (const auto& v : lhs) base.push_back(to_row(v));
  std::size_t rank_lhs = rref(base).pivot_cols.size();

  Matrix both = base;
  for (const auto& v : rhs) both.push_back(to_row(v));
  if (rref(both).pivot_cols.size() != rank_lhs) return false;

  Matrix rhs_rows;
  for (const auto& v : rhs) rhs_rows.push_back(to_row(v));
  return rref(rhs_rows).pivot_cols.size() == rank_lhs;
}

}  // namespace testsupport
