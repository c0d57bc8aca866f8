#pragma once

#include "liesym/linear.hpp"
#include "liesym/vector_field.hpp"

#include <optional>
#include <vector>

namespace liesym {

/// Finite-dimensional Lie algebra spanned by a basis of point fields.
/// Construction computes the exact structure constants and throws
/// UnsupportedError when a bracket leaves the span, or Error when the
/// given fields are linearly dependent.
class LieAlgebra {
public:
  explicit LieAlgebra(std::vector<VectorField> basis);

  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<VectorField>& basis() const { return basis_; }

  /// Coefficient of basis[k] in [basis[i], basis[j]].
  const Rational& structure(int i, int j, int k) const;

  /// [basis[i], basis[j]] as a field, for table printing.
  VectorField bracket_field(int i, int j) const;

  /// Bracket of coordinate vectors.
  Row bracket(const Row& u, const Row& w) const;

  /// Matrix of ad(v) = intercalate [v, .] acting on coordinates.
  Matrix ad(const Row& v) const;

  /// Represents an arbitrary point field in this basis, if it lies in the
  /// span.
  std::optional<Row> coordinates(const VectorField& v) const;

  /// Whether the span of the given coordinate vectors closes under the
  /// bracket.
  bool is_subalgebra(const std::vector<Row>& vectors) const;

private:
  const Rational& c(int i, int j, int k) const;

  std::vector<VectorField> basis_;
  std::vector<Rational> table_;  // n^3 structure constants
  // flattening of basis fields over component monomials, kept for
  // coordinates(); rows are basis fields
  std::vector<std::pair<int, Monomial>> keys_;
  Matrix flat_;
};

/// Derived and lower central series data.
struct SeriesReport {
  bool solvable = false;
  bool nilpotent = false;
  /// Steps until the derived series vanishes (0 when it never does).
  int derived_length = 0;
  /// Steps until the lower central series vanishes (0 when it never does).
  int nilpotency_class = 0;
  std::vector<int> derived_dims;        // dim L^(k) for k = 1, ... until stable
  std::vector<int> lower_central_dims;  // dim L^k  for k = 1, ... until stable
};

SeriesReport series(const LieAlgebra& L);

/// Ad(exp(eps * v_i)) = exp(-eps * ad(v_i)) as a matrix over expressions.
/// Exact whenever ad(v_i) is nilpotent; otherwise a truncation order must
/// be supplied and `exact` is false.
struct AdjointMatrix {
  std::vector<std::vector<Expr>> entries;  // entries[k][j]: coeff of e_k in Ad e_j
  bool exact = true;
  int terms = 0;  // series terms actually used
};

AdjointMatrix adjoint_matrix(const LieAlgebra& L, int generator, const Expr& eps,
                             std::optional<int> truncation = std::nullopt);

/// Exact rational action of Ad(exp(eps * basis[generator])) on coordinates.
/// Requires a nilpotent ad.
Row adjoint_apply(const LieAlgebra& L, int generator, const Rational& eps, const Row& w);

}  // namespace liesym
