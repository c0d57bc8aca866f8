#pragma once

#include "liesym/rational.hpp"

#include <optional>
#include <vector>

namespace liesym {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

struct Rref {
  Matrix m;                     // reduced row echelon form, zero rows dropped
  std::vector<int> pivot_cols;  // ascending; size is the rank
};

/// Exact Gauss-Jordan elimination with leading ones.
Rref rref(Matrix a);

/// Kernel basis of a matrix with `cols` columns. One vector per free
/// column, in ascending free-column order, each carrying a 1 in its own
/// free column and 0 in the others. This ordering is what downstream code
/// relies on for reproducible symmetry bases.
std::vector<Row> nullspace(const Matrix& a, int cols);

/// Any exact solution of A x = b (free variables set to 0), or nullopt
/// when the system is inconsistent.
std::optional<Row> solve(const Matrix& a, const Row& b);

bool is_zero_row(const Row& r);

}  // namespace liesym
