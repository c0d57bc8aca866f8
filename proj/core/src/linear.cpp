#include "liesym/linear.hpp"

#include "liesym/errors.hpp"

#include <algorithm>

namespace liesym {

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

Rref rref(Matrix a) {
  Rref out;
  if (a.empty()) return out;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  for (const auto& r : a) {
    if (r.size() != cols) throw InternalError("ragged matrix");
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Exact arithmetic, so any nonzero entry works as the pivot. Take the
    // first to keep results deterministic.
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (a[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(a[pivot_row], a[found]);

    const Rational inv = Rational(1) / a[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) a[pivot_row][c] *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[pivot_row][c];
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++pivot_row;
  }

  a.resize(pivot_row);
  out.m = std::move(a);
  return out;
}

std::vector<Row> nullspace(const Matrix& a, int cols) {
  Rref r = a.empty() ? Rref{} : rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;

  std::vector<Row> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      v[r.pivot_cols[i]] = -r.m[i][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Row> solve(const Matrix& a, const Row& b) {
  if (a.size() != b.size()) throw InternalError("solve: dimension mismatch");
  if (a.empty()) return Row{};
  const std::size_t cols = a.front().size();

  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Rref r = rref(std::move(aug));

  Row x(cols, Rational(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    int p = r.pivot_cols[i];
    if (p == static_cast<int>(cols)) return std::nullopt;  // pivot in the b column
    x[p] = r.m[i].back();
  }
  return x;
}

}  // namespace liesym
