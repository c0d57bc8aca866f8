#include "liesym/reduce.hpp"

#include "liesym/errors.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <utility>

namespace liesym {

namespace {

bool parameters_only(const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [var, exp] : m.factors()) {
      if (!is_parameter(var)) return false;
    }
  }
  return true;
}

/// Index k when v is the symbol zeta (k = 0) or zeta_chik, else -1.
int zeta_index(const VarRef& v) {
  if (!is_parameter(v)) return -1;
  const std::string& name = std::get<Symbol>(v).name;
  if (name == "zeta") return 0;
  if (name == "zeta_chi") return 1;
  if (name.rfind("zeta_chi", 0) != 0) return -1;
  int k = 0;
  for (std::size_t i = 8; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    k = k * 10 + (name[i] - '0');
  }
  return k >= 2 ? k : -1;
}

VarRef chi_var() { return param("chi"); }
VarRef zeta_var(int k) { return param(zeta_name(k)); }

}  // namespace

std::string zeta_name(int k) {
  if (k == 0) return "zeta";
  if (k == 1) return "zeta_chi";
  return "zeta_chi" + std::to_string(k);
}

AffineGenerator affine_components(const VectorField& v) {
  validate_point_field(v);
  AffineGenerator g;
  Poly xi = expand(v.xi);
  g.eta = expand(v.eta);
  g.phi = expand(v.phi);

  if (!parameters_only(g.eta))
    throw UnsupportedError("this generator class needs a constant eta component");
  if (!parameters_only(g.phi))
    throw UnsupportedError("this generator class needs a constant phi component");

  // xi may be at most linear in t and must not involve x or u.
  for (const auto& [m, c] : xi.terms()) {
    int t_exp = m.exponent_of(sym_t());
    Monomial rest = m.without(sym_t());
    for (const auto& [var, exp] : rest.factors()) {
      if (!is_parameter(var))
        throw UnsupportedError("this generator class needs xi = xi0 + xit * t with constant xi0, xit");
    }
    if (t_exp == 0)
      g.xi0 += Poly::term(c, rest);
    else if (t_exp == 1)
      g.xit += Poly::term(c, rest);
    else
      throw UnsupportedError("this generator class needs xi at most linear in t");
  }
  return g;
}

Invariants invariants(const VectorField& v) {
  AffineGenerator g = affine_components(v);
  const Poly& eta = g.eta;
  const Poly& phi = g.phi;
  const Poly& xi0 = g.xi0;
  const Poly& xit = g.xit;
  Poly xi = xi0 + xit * Poly::variable(sym_t());

  Invariants out;
  out.generator = v;
  const Poly x_poly = Poly::variable(sym_x());
  const Poly t_poly = Poly::variable(sym_t());

  if (!eta.is_zero()) {
    if (eta.term_count() != 1)
      throw UnsupportedError("cannot invert a multi-term eta exactly");
    Poly inv_eta = eta.pow(-1);
    Poly chi = x_poly - xi0 * inv_eta * t_poly -
               make_rational(1, 2) * (xit * inv_eta * t_poly * t_poly);
    out.chi = to_expr(chi);
    out.shift = to_expr(phi * inv_eta * t_poly);
    out.eta_nonzero = true;
    return out;
  }

  if (xi.is_zero())
    throw UnsupportedError("a pure d/du generator admits no invariant solution ansatz");

  out.chi = to_expr(t_poly);
  if (phi.is_zero()) {
    out.shift = Expr::constant(0);
    return out;
  }
  if (xi.term_count() != 1)
    throw UnsupportedError("cannot invert a multi-term xi exactly");
  bool xi_has_t = false;
  {
    const Monomial& m = xi.terms().begin()->first;
    if (m.exponent_of(sym_t()) == 1) xi_has_t = true;
  }
  out.shift = to_expr(phi * xi.pow(-1) * x_poly);
  if (xi_has_t) out.singular_loci.push_back("t = 0");
  return out;
}

ReducedODE reduce_pde(const EvolutionPDE& pde, const Invariants& inv) {
  for (const Symbol& s : pde.parameters()) {
    if (s.name == "chi" || zeta_index(param(s.name)) >= 0)
      throw UnsupportedError("equation parameter '" + s.name +
                             "' collides with a reduction symbol");
  }

  const VarRef x = sym_x();
  const VarRef t = sym_t();
  Poly chi = expand(inv.chi);
  Poly shift = expand(inv.shift);
  Poly chi_x = diff_partial(chi, x);
  Poly chi_t = diff_partial(chi, t);

  // The derivation extending d/dx (wrt_x) or d/dt to functions of the
  // invariant symbols: zeta_chik stands for the k-th derivative of zeta
  // evaluated at chi(x, t), so its image is zeta_chi(k+1) times the
  // matching partial of chi.
  auto d_dir = [&](const Poly& p, bool wrt_x) {
    return p.derived([&](const VarRef& v) -> Poly {
      if (compare_vars(v, x) == 0) return Poly::constant(wrt_x ? 1 : 0);
      if (compare_vars(v, t) == 0) return Poly::constant(wrt_x ? 0 : 1);
      int k = zeta_index(v);
      if (k >= 0) return Poly::variable(zeta_var(k + 1)) * (wrt_x ? chi_x : chi_t);
      return Poly();
    });
  };

  std::map<std::pair<int, int>, Poly> images;
  images[{0, 0}] = Poly::variable(zeta_var(0)) + shift;
  std::function<const Poly&(int, int)> image = [&](int dx, int dt) -> const Poly& {
    auto it = images.find({dx, dt});
    if (it != images.end()) return it->second;
    Poly img = dx > 0 ? d_dir(image(dx - 1, dt), true) : d_dir(image(0, dt - 1), false);
    return images.emplace(std::make_pair(dx, dt), std::move(img)).first->second;
  };

  bool saw_t = false;
  Poly result;
  for (const auto& [m, c] : pde.delta().terms()) {
    Poly piece = Poly::constant(c);
    for (const auto& [var, exp] : m.factors()) {
      if (is_jet(var)) {
        if (exp < 0)
          throw UnsupportedError("cannot reduce an equation with negative jet powers");
        const JetVar& j = std::get<JetVar>(var);
        const Poly& img = image(j.dx, j.dt);
        if (img.depends_on(t)) saw_t = true;
        piece *= img.pow(exp);
      } else {
        piece *= Poly::variable(var, exp);
      }
    }
    result += piece;
  }

  if (result.depends_on(x))
    throw MismatchError("x survives the substitution; the generator does not reduce this equation");

  ReducedODE ode;
  ode.singular_loci = inv.singular_loci;
  if (inv.eta_nonzero) {
    if (result.depends_on(t))
      throw MismatchError("t survives the substitution; the generator does not reduce this equation");
    if (saw_t)
      ode.notes.push_back(
          "the substitution introduces explicit t terms that cancel identically in the final form");
  } else {
    result = result.substituted(t, Poly::variable(chi_var()));
  }

  bool chi_pole = false;
  for (const auto& [m, c] : result.terms()) {
    for (const auto& [var, exp] : m.factors()) {
      int k = zeta_index(var);
      if (k > ode.order) ode.order = k;
      if (compare_vars(var, chi_var()) == 0 && exp < 0) chi_pole = true;
    }
  }
  if (chi_pole) ode.singular_loci.push_back("chi = 0");
  ode.expression = to_expr(result);
  return ode;
}

std::optional<ClosedForm> solve_linear_first_order(const ReducedODE& ode, const Invariants& inv) {
  if (ode.order != 1) return std::nullopt;
  Poly p = expand(ode.expression);
  const VarRef z0 = zeta_var(0);
  const VarRef z1 = zeta_var(1);

  Poly lead, rest;  // p = lead * zeta_chi + rest * zeta, nothing else
  for (const auto& [m, c] : p.terms()) {
    int e0 = m.exponent_of(z0);
    int e1 = m.exponent_of(z1);
    if (e1 == 1 && e0 == 0)
      lead += Poly::term(c, m.without(z1));
    else if (e0 == 1 && e1 == 0)
      rest += Poly::term(c, m.without(z0));
    else
      return std::nullopt;
  }
  if (lead.is_zero() || lead.term_count() != 1) return std::nullopt;

  long kappa = 0;
  if (!rest.is_zero()) {
    if (rest.term_count() != 1) return std::nullopt;
    Poly ratio = rest * lead.pow(-1);
    const auto& [m, c] = *ratio.terms().begin();
    if (m.factors().size() != 1) return std::nullopt;
    const auto& [var, exp] = m.factors().front();
    if (compare_vars(var, chi_var()) != 0 || exp != -1) return std::nullopt;
    if (denominator(c) != 1) return std::nullopt;
    kappa = numerator(c).convert_to<long>();
  }

  Poly zeta_sol = Poly::variable(param("c1"));
  if (kappa != 0) zeta_sol *= Poly::variable(chi_var()).pow(static_cast<int>(-kappa));

  Poly u_sol = zeta_sol.substituted(chi_var(), expand(inv.chi)) + expand(inv.shift);
  return ClosedForm{to_expr(zeta_sol), to_expr(u_sol)};
}

}  // namespace liesym
