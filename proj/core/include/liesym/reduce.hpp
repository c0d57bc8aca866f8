#pragma once

#include "liesym/pde.hpp"
#include "liesym/vector_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liesym {

/// Invariant coordinates of a generator, written so that an invariant
/// solution has the form u = zeta(chi) + shift(x, t).
///
/// Supported generators:
///   * eta != 0, constant: xi = xi0 + xit * t with constant xi0, xit, and
///     constant phi. Then chi = x - (xi0 t + xit t^2 / 2) / eta and
///     shift = (phi / eta) t.
///   * eta == 0: chi = t and shift = (phi / xi) x, with xi a single term
///     that is constant or a constant multiple of t (any nonzero xi when
///     phi == 0, where shift vanishes).
/// Everything else is refused with UnsupportedError.
struct Invariants {
  VectorField generator;
  Expr chi;
  Expr shift;
  bool eta_nonzero = false;
  std::vector<std::string> singular_loci;
};

Invariants invariants(const VectorField& v);

/// The split xi = xi0 + xit * t with constant eta and phi that both the
/// reducer and the exact group flow rely on. Throws UnsupportedError when
/// the generator does not have this shape.
struct AffineGenerator {
  Poly xi0;
  Poly xit;
  Poly eta;
  Poly phi;
};

AffineGenerator affine_components(const VectorField& v);

/// Name of the k-th derivative symbol: zeta, zeta_chi, zeta_chi2, ...
std::string zeta_name(int k);

/// The ODE satisfied by zeta(chi), as a polynomial expression in chi,
/// zeta, zeta_chi, ..., and the equation parameters, equated to zero.
struct ReducedODE {
  Expr expression;
  int order = 0;
  std::vector<std::string> singular_loci;
  std::vector<std::string> notes;
};

/// Substitutes u = zeta(chi) + shift into the equation and eliminates x
/// and t. Throws MismatchError when they survive, which happens exactly
/// when the generator is not a symmetry of the equation.
ReducedODE reduce_pde(const EvolutionPDE& pde, const Invariants& inv);

struct ClosedForm {
  Expr zeta;  // general solution in chi and the constant c1
  Expr u;     // composed back through the invariants
};

/// Solves reductions of the shape zeta_chi + (kappa / chi) zeta = 0 with
/// integer kappa (kappa = 0 included) and composes the solution back to
/// u(x, t). Returns nullopt for any other shape.
std::optional<ClosedForm> solve_linear_first_order(const ReducedODE& ode, const Invariants& inv);

}  // namespace liesym
