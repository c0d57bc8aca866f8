#include "liesym/verify.hpp"

#include "liesym/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

namespace liesym {

namespace {

/// Substitutes each jet of delta by images[(dx, dt)] and keeps every other
/// factor. Shared by the symbolic and numeric residual paths.
Poly substitute_jets(const Poly& delta,
                     const std::function<const Poly&(const JetVar&)>& image) {
  Poly result;
  for (const auto& [m, c] : delta.terms()) {
    Poly piece = Poly::constant(c);
    for (const auto& [var, exp] : m.factors()) {
      if (is_jet(var)) {
        if (exp < 0) throw UnsupportedError("negative jet powers are not supported here");
        piece *= image(std::get<JetVar>(var)).pow(exp);
      } else {
        piece *= Poly::variable(var, exp);
      }
    }
    result += piece;
  }
  return result;
}

class PartialTable {
public:
  explicit PartialTable(Poly f) { memo_[{0, 0}] = std::move(f); }

  const Poly& get(int dx, int dt) {
    auto it = memo_.find({dx, dt});
    if (it != memo_.end()) return it->second;
    Poly p = dx > 0 ? diff_partial(get(dx - 1, dt), VarRef(sym_x()))
                    : diff_partial(get(0, dt - 1), VarRef(sym_t()));
    return memo_.emplace(std::make_pair(dx, dt), std::move(p)).first->second;
  }

private:
  std::map<std::pair<int, int>, Poly> memo_;
};

Poly expanded_solution(const Expr& solution) {
  Poly f = expand(solution);
  if (f.max_jet_order() >= 0) throw Error("a candidate solution must not involve u");
  return f;
}

}  // namespace

Poly residual_symbolic(const EvolutionPDE& pde, const Expr& solution) {
  PartialTable partials(expanded_solution(solution));
  return substitute_jets(pde.delta(),
                         [&](const JetVar& j) -> const Poly& { return partials.get(j.dx, j.dt); });
}

template <typename Sink>
ResidualReport scan_residuals(const EvolutionPDE& pde, const Expr& solution, const Grid& grid,
                              const std::map<std::string, Rational>& params, Sink&& sink) {
  if (grid.nx < 1 || grid.nt < 1) throw Error("residual grid needs at least one point per axis");
  PartialTable partials(expanded_solution(solution));

  // Collect the jets Delta actually uses and bind their partials once.
  std::vector<std::pair<JetVar, const Poly*>> jets;
  for (const VarRef& v : pde.delta().variables()) {
    if (is_jet(v)) {
      const JetVar& j = std::get<JetVar>(v);
      jets.emplace_back(j, &partials.get(j.dx, j.dt));
    }
  }

  auto param_value = [&](const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw Error("parameter '" + name + "' needs a value");
    return to_double(it->second);
  };

  ResidualReport report;
  double sum_sq = 0.0;
  for (int it_t = 0; it_t < grid.nt; ++it_t) {
    double t = grid.nt == 1 ? grid.t_min
                            : grid.t_min + (grid.t_max - grid.t_min) * it_t / (grid.nt - 1);
    for (int it_x = 0; it_x < grid.nx; ++it_x) {
      double x = grid.nx == 1 ? grid.x_min
                              : grid.x_min + (grid.x_max - grid.x_min) * it_x / (grid.nx - 1);

      std::map<std::pair<int, int>, double> jet_values;
      auto env = [&](const VarRef& v) -> double {
        if (is_jet(v)) {
          const JetVar& j = std::get<JetVar>(v);
          return jet_values.at({j.dx, j.dt});
        }
        if (compare_vars(v, VarRef(sym_x())) == 0) return x;
        if (compare_vars(v, VarRef(sym_t())) == 0) return t;
        return param_value(std::get<Symbol>(v).name);
      };

      bool ok = true;
      for (const auto& [j, poly] : jets) {
        double value = poly->eval_double(env);
        if (!std::isfinite(value)) {
          ok = false;
          break;
        }
        jet_values[{j.dx, j.dt}] = value;
      }
      double r = ok ? pde.delta().eval_double(env) : 0.0;
      if (!ok || !std::isfinite(r)) {
        ++report.singular;
        continue;
      }
      ++report.points;
      report.max_abs = std::max(report.max_abs, std::abs(r));
      sum_sq += r * r;
      sink(x, t, r);
    }
  }
  if (report.points > 0) report.rms = std::sqrt(sum_sq / report.points);
  return report;
}

ResidualReport residual_numeric(const EvolutionPDE& pde, const Expr& solution, const Grid& grid,
                                const std::map<std::string, Rational>& params) {
  return scan_residuals(pde, solution, grid, params, [](double, double, double) {});
}

std::vector<ResidualSample> residual_field(const EvolutionPDE& pde, const Expr& solution,
                                           const Grid& grid,
                                           const std::map<std::string, Rational>& params) {
  std::vector<ResidualSample> samples;
  scan_residuals(pde, solution, grid, params,
                 [&](double x, double t, double r) { samples.push_back({x, t, r}); });
  return samples;
}

Poly invariance_defect(const VectorField& v, const Expr& solution) {
  Poly f = expanded_solution(solution);
  const VarRef u = JetVar{0, 0};
  Expr f_expr = to_expr(f);
  Poly xi = expand(substitute(v.xi, u, f_expr));
  Poly eta = expand(substitute(v.eta, u, f_expr));
  Poly phi = expand(substitute(v.phi, u, f_expr));
  return phi - xi * diff_partial(f, VarRef(sym_x())) - eta * diff_partial(f, VarRef(sym_t()));
}

Expr transform_solution(const VectorField& v, const Rational& s, const Expr& solution) {
  return transform_solution(v, Expr::constant(s), solution);
}

Expr transform_solution(const VectorField& v, const Expr& s, const Expr& solution) {
  AffineGenerator g = affine_components(v);
  Poly s_poly = expand(s);
  for (const VarRef& var : s_poly.variables())
    if (!is_parameter(var))
      throw UnsupportedError("the flow parameter may involve parameters only");
  const Poly x_poly = Poly::variable(sym_x());
  const Poly t_poly = Poly::variable(sym_t());

  Poly x_image = x_poly - s_poly * g.xi0 - s_poly * (g.xit * t_poly) +
                 make_rational(1, 2) * (s_poly * s_poly * g.xit * g.eta);
  Poly t_image = t_poly - s_poly * g.eta;

  // Simultaneous substitution via placeholders that cannot collide with
  // parsed parameter names.
  const VarRef x_hold = param("x#flow");
  const VarRef t_hold = param("t#flow");
  Expr out = substitute(solution, VarRef(sym_x()), Expr::variable(x_hold));
  out = substitute(out, VarRef(sym_t()), Expr::variable(t_hold));
  out = substitute(out, x_hold, to_expr(x_image));
  out = substitute(out, t_hold, to_expr(t_image));
  return out + to_expr(s_poly * g.phi);
}

std::vector<Rational> fd_weights(int m, const std::vector<Rational>& offsets) {
  const int n = static_cast<int>(offsets.size());
  if (m < 0 || n < m + 1) throw Error("fd_weights needs at least m + 1 offsets");

  // Fornberg's recursion, exact: w[j][k] approximates the k-th derivative
  // at zero from the first points as they are admitted one by one.
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(m + 1, Rational(0)));
  w[0][0] = 1;
  Rational c1 = 1;
  Rational c4 = offsets[0];
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    Rational c2 = 1;
    Rational c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      Rational c3 = offsets[i] - offsets[j];
      if (sign(c3) == 0) throw Error("fd_weights offsets must be distinct");
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          w[i][k] = c1 * (Rational(k) * w[i - 1][k - 1] - c5 * w[i - 1][k]) / c2;
        w[i][0] = -c1 * c5 * w[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) w[j][k] = (c4 * w[j][k] - Rational(k) * w[j][k - 1]) / c3;
      w[j][0] = c4 * w[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<Rational> out(n);
  for (int j = 0; j < n; ++j) out[j] = w[j][m];
  return out;
}

ResidualReport residual_ode(const ReducedODE& ode, const std::function<double(double)>& profile,
                            const OdeGrid& grid, const std::map<std::string, double>& params) {
  if (grid.n < 2) throw Error("residual grid needs at least two points");
  if (ode.order > 5) throw UnsupportedError("stencils are sized for reductions up to order five");

  constexpr int kRadius = 5;
  std::vector<Rational> offsets;
  for (int j = -kRadius; j <= kRadius; ++j) offsets.push_back(Rational(j));
  std::vector<std::vector<double>> weights(ode.order + 1);
  for (int m = 1; m <= ode.order; ++m) {
    std::vector<Rational> wm = fd_weights(m, offsets);
    for (const Rational& q : wm) weights[m].push_back(to_double(q));
  }

  const double h = (grid.chi_max - grid.chi_min) / (grid.n - 1);
  std::vector<double> samples(grid.n + 2 * kRadius);
  for (int j = 0; j < static_cast<int>(samples.size()); ++j)
    samples[j] = profile(grid.chi_min + (j - kRadius) * h);

  Poly expr = expand(ode.expression);
  ResidualReport report;
  double sum_sq = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    double chi = grid.chi_min + i * h;
    std::vector<double> derivs(ode.order + 1);
    derivs[0] = samples[i + kRadius];
    bool ok = std::isfinite(derivs[0]);
    for (int m = 1; ok && m <= ode.order; ++m) {
      double acc = 0.0;
      for (int j = -kRadius; j <= kRadius; ++j)
        acc += weights[m][j + kRadius] * samples[i + kRadius + j];
      derivs[m] = acc / std::pow(h, m);
      ok = std::isfinite(derivs[m]);
    }
    if (!ok) {
      ++report.singular;
      continue;
    }

    auto env = [&](const VarRef& v) -> double {
      if (is_parameter(v)) {
        const std::string& name = std::get<Symbol>(v).name;
        if (name == "chi") return chi;
        if (name == "zeta") return derivs[0];
        if (name.rfind("zeta_chi", 0) == 0 &&
            std::all_of(name.begin() + 8, name.end(),
                        [](unsigned char ch) { return std::isdigit(ch); })) {
          int m = name.size() == 8 ? 1 : std::stoi(name.substr(8));
          if (m > ode.order) throw Error("reduced equation exceeds its declared order");
          return derivs[static_cast<std::size_t>(m)];
        }
        auto it = params.find(name);
        if (it == params.end()) throw Error("parameter '" + name + "' needs a value");
        return it->second;
      }
      throw Error("unexpected variable in a reduced equation");
    };
    double r = expr.eval_double(env);
    if (!std::isfinite(r)) {
      ++report.singular;
      continue;
    }
    ++report.points;
    report.max_abs = std::max(report.max_abs, std::abs(r));
    sum_sq += r * r;
  }
  if (report.points > 0) report.rms = std::sqrt(sum_sq / report.points);
  return report;
}

}  // namespace liesym
