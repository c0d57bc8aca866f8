#include "liesym/pde.hpp"

#include "liesym/errors.hpp"

#include <set>

namespace liesym {

namespace {

// Number of t-derivative factors in a monomial, weighted by exponent, and
// whether any of them is something other than plain u_t.
struct TJetProfile {
  int count = 0;
  bool only_plain_ut = true;
};

TJetProfile t_jet_profile(const Monomial& m) {
  TJetProfile out;
  for (const auto& [var, exp] : m.factors()) {
    const auto* j = std::get_if<JetVar>(&var);
    if (!j || j->dt == 0) continue;
    out.count += exp;
    if (j->dx != 0 || j->dt != 1 || exp != 1) out.only_plain_ut = false;
  }
  return out;
}

}  // namespace

EvolutionPDE EvolutionPDE::from_expression(const Expr& delta, int max_jet_order) {
  Poly p = expand(delta);
  if (p.is_zero()) throw UnsupportedError("the zero expression is not an equation");

  const Monomial ut = Monomial::variable(VarRef(JetVar{0, 1}));
  Poly ut_coeff;   // coefficient of u_t
  Poly remainder;  // everything without t-derivatives
  for (const auto& [m, c] : p.terms()) {
    TJetProfile prof = t_jet_profile(m);
    if (prof.count == 0) {
      remainder += Poly::term(c, m);
    } else if (prof.count == 1 && prof.only_plain_ut) {
      ut_coeff += Poly::term(c, m.times(ut.pow(-1)));
    } else {
      throw UnsupportedError("not an evolution equation: found a term with " +
                             std::string(prof.only_plain_ut ? "repeated" : "higher or mixed") +
                             " t-derivatives (" + m.str() + ")");
    }
  }

  if (ut_coeff.is_zero()) {
    throw UnsupportedError("not an evolution equation: u_t does not appear");
  }
  if (ut_coeff.term_count() != 1) {
    throw UnsupportedError("u_t coefficient must be a single term");
  }
  const auto& [km, kc] = *ut_coeff.terms().begin();
  for (const auto& [var, exp] : km.factors()) {
    if (!is_parameter(var)) {
      throw UnsupportedError("u_t coefficient must be constant in x, t and u");
    }
  }

  EvolutionPDE out;
  out.rhs_ = -(remainder * ut_coeff.pow(-1));
  out.delta_ = Poly::variable(VarRef(JetVar{0, 1})) - out.rhs_;
  out.order_ = std::max(1, out.rhs_.max_jet_order());
  if (out.order_ > max_jet_order) {
    throw OrderError("equation order exceeds the jet order cap");
  }
  return out;
}

EvolutionPDE EvolutionPDE::parse(std::string_view text, const ParseOptions& opts) {
  return from_expression(parse_equation(text, opts), opts.max_jet_order);
}

std::vector<Symbol> EvolutionPDE::parameters() const {
  std::set<std::string> names;
  for (const VarRef& v : delta_.variables()) {
    if (is_parameter(v)) names.insert(std::get<Symbol>(v).name);
  }
  std::vector<Symbol> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(param(n));
  return out;
}

EvolutionPDE EvolutionPDE::instantiated(const std::map<std::string, Rational>& values) const {
  Poly p = delta_;
  for (const Symbol& s : parameters()) {
    auto it = values.find(s.name);
    if (it == values.end()) {
      throw Error("no value given for parameter '" + s.name + "'");
    }
    p = p.substituted(VarRef(s), Poly::constant(it->second));
  }
  // Re-run normalization: a parameter set to zero can lower the order or
  // even stop the equation from being an evolution equation.
  return from_expression(to_expr(p));
}

JetReducer::JetReducer(const EvolutionPDE& pde, int max_jet_order)
    : rhs_(pde.rhs()), max_order_(max_jet_order) {}

const Poly& JetReducer::solved_jet(int dx, int dt) {
  if (dt < 1) throw InternalError("solved_jet needs a t-derivative");
  auto it = memo_.find({dx, dt});
  if (it != memo_.end()) return it->second;

  Poly value;
  if (dt == 1) {
    value = rhs_;
    for (int i = 0; i < dx; ++i) value = total_derivative(value, Direction::X, max_order_);
  } else {
    // Step down in t, then clear the fresh first-order t-jets recursively.
    value = total_derivative(solved_jet(dx, dt - 1), Direction::T, max_order_);
    value = reduce(value);
  }
  return memo_.emplace(std::pair{dx, dt}, std::move(value)).first->second;
}

Poly JetReducer::reduce(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly piece = Poly::constant(c);
    Monomial kept;
    for (const auto& [var, exp] : m.factors()) {
      const auto* j = std::get_if<JetVar>(&var);
      if (!j || j->dt == 0) {
        kept = kept.times(Monomial::variable(var, exp));
        continue;
      }
      if (exp < 0) {
        throw UnsupportedError("cannot substitute into a negative power of " + jet_name(*j));
      }
      piece *= solved_jet(j->dx, j->dt).pow(exp);
    }
    piece *= Poly::term(Rational(1), kept);
    out += piece;
  }
  return out;
}

Poly reduce_mod_equation(const Poly& p, const EvolutionPDE& pde, int max_jet_order) {
  JetReducer r(pde, max_jet_order);
  return r.reduce(p);
}

Expr reduce_mod_equation(const Expr& e, const EvolutionPDE& pde, int max_jet_order) {
  return to_expr(reduce_mod_equation(expand(e), pde, max_jet_order));
}

}  // namespace liesym
