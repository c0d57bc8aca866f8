#pragma once

#include "liesym/linear.hpp"
#include "liesym/pde.hpp"
#include "liesym/vector_field.hpp"

#include <map>
#include <string>
#include <vector>

namespace liesym {

/// Polynomial ansatz for generator components: xi, eta and phi are unknown
/// rational combinations of the monomials x^i t^j u^k with i+j+k <= degree.
/// Columns are component major (all xi coefficients, then eta, then phi)
/// with monomials graded ascending, so the constant term of xi is column 0.
class Ansatz {
public:
  explicit Ansatz(int degree);

  int degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  int unknown_count() const { return 3 * static_cast<int>(monomials_.size()); }

  /// Column of the coefficient of `m` in component 0 (xi), 1 (eta), 2 (phi).
  int index(int component, const Monomial& m) const;
  std::string label(int column) const;

  /// Assembles the concrete generator for a coordinate vector.
  VectorField field_from(const Row& coords) const;

private:
  int degree_;
  std::vector<Monomial> monomials_;
};

/// Linear determining system over the ansatz unknowns: one row per jet
/// monomial of the reduced invariance condition, canonically scaled
/// (leading coefficient 1) and deduplicated.
struct DeterminingSystem {
  Matrix rows;
  std::size_t raw_rows = 0;  // before scaling and deduplication
  int unknowns = 0;
};

/// pde must be parameter free; instantiate first.
DeterminingSystem determining_system(const EvolutionPDE& pde, const Ansatz& ansatz,
                                     int max_jet_order = kDefaultMaxJetOrder);

using ParameterPoint = std::map<std::string, Rational>;

/// Determining system and kernel at one parameter point.
struct PointSolution {
  DeterminingSystem system;
  std::vector<int> pivot_cols;
  std::vector<Row> kernel;  // one vector per free column, ascending
};

PointSolution solve_at_point(const EvolutionPDE& pde, const Ansatz& ansatz,
                             const ParameterPoint& point,
                             int max_jet_order = kDefaultMaxJetOrder);

/// Reconstructs the single-term polynomial c * prod(params^e) from its
/// values at two parameter points whose second coordinates are distinct
/// primes. Throws MismatchError when no such monomial exists.
Poly fit_parameter_monomial(const Rational& value1, const Rational& value2,
                            const std::vector<Symbol>& params, const ParameterPoint& p1,
                            const ParameterPoint& p2);

/// Result of the full two-point symmetry computation.
struct SymmetryBasis {
  std::vector<VectorField> fields;       // canonical: leading coefficient 1
  std::vector<std::vector<Poly>> kernel; // symbolic ansatz coordinates per field
  int degree = 0;
  int unknowns = 0;
  std::size_t raw_rows = 0;
  std::size_t rows = 0;
  ParameterPoint point1, point2;

  int dimension() const { return static_cast<int>(fields.size()); }
};

/// Solves the determining equations at two parameter points, reconstructs
/// exact parameter-dependent coefficients, normalizes each basis field so
/// its earliest nonzero ansatz coordinate is 1, and re-checks the symmetry
/// condition symbolically. Throws MismatchError when the points disagree
/// or the reconstruction fails the symbolic check.
SymmetryBasis solve_symmetries(const EvolutionPDE& pde, int degree, const ParameterPoint& p1,
                               const ParameterPoint& p2,
                               int max_jet_order = kDefaultMaxJetOrder);

}  // namespace liesym
