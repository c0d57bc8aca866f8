#pragma once

#include "liesym/pde.hpp"
#include "liesym/reduce.hpp"
#include "liesym/vector_field.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace liesym {

struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  double t_min = 1.0;
  double t_max = 2.0;
  int nx = 100;
  int nt = 100;
};

struct ResidualReport {
  double max_abs = 0.0;
  double rms = 0.0;
  int points = 0;    // finite evaluation points
  int singular = 0;  // skipped because some factor failed to evaluate
};

/// Exact residual of a candidate solution u = f(x, t): every jet in Delta
/// is replaced by the matching partial derivative of f and the result is
/// expanded. The zero polynomial certifies the solution for all parameter
/// values. f must not involve u.
Poly residual_symbolic(const EvolutionPDE& pde, const Expr& solution);

/// Same residual evaluated in floating point over a grid. Every parameter
/// of the equation and of the solution needs a value.
ResidualReport residual_numeric(const EvolutionPDE& pde, const Expr& solution, const Grid& grid,
                                const std::map<std::string, Rational>& params);

struct ResidualSample {
  double x = 0.0;
  double t = 0.0;
  double residual = 0.0;
};

/// The residual at every regular grid point, in the same t-major order as
/// residual_numeric scans. Singular points are skipped.
std::vector<ResidualSample> residual_field(const EvolutionPDE& pde, const Expr& solution,
                                           const Grid& grid,
                                           const std::map<std::string, Rational>& params);

/// phi - xi f_x - eta f_t with u replaced by f inside the coefficients;
/// identically zero exactly when f is invariant under the generator.
Poly invariance_defect(const VectorField& v, const Expr& solution);

/// Exact action of the one-parameter group of an affine generator on a
/// solution: u(x, t) -> u(x - xi0 s - xit t s + xit eta s^2 / 2, t - eta s)
/// + phi s. The result is a tree; expanding it can fail when a shifted
/// variable lands under a negative power.
Expr transform_solution(const VectorField& v, const Rational& s, const Expr& solution);

/// Group action with a symbolic flow parameter; s may involve parameters
/// only.
Expr transform_solution(const VectorField& v, const Expr& s, const Expr& solution);

/// Finite difference weights at zero for the m-th derivative over the
/// given offsets (Fornberg's recursion, exact arithmetic). The caller
/// scales by h^-m.
std::vector<Rational> fd_weights(int m, const std::vector<Rational>& offsets);

struct OdeGrid {
  double chi_min = 0.0;
  double chi_max = 1.0;
  int n = 101;
};

/// Numeric residual of a reduced equation against a sampled profile
/// zeta(chi). Derivatives come from 11-point centered stencils (accuracy
/// at least six for orders up to five), so the profile is sampled on a
/// halo extending five steps beyond each end.
ResidualReport residual_ode(const ReducedODE& ode, const std::function<double(double)>& profile,
                            const OdeGrid& grid, const std::map<std::string, double>& params);

}  // namespace liesym
