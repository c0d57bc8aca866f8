#include "liesym/lie_algebra.hpp"

#include "liesym/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace liesym {

namespace {

struct KeyLess {
  bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return compare_monomials(a.second, b.second) < 0;
  }
};

std::array<Poly, 3> components(const VectorField& v) {
  return {expand(v.xi), expand(v.eta), expand(v.phi)};
}

int subspace_rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(rref(rows).pivot_cols.size());
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<VectorField> basis) : basis_(std::move(basis)) {
  const int n = dimension();
  if (n == 0) throw Error("empty basis");

  // Pairwise brackets first; the flattening must cover their monomials too.
  std::vector<std::vector<VectorField>> br(n, std::vector<VectorField>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      br[i][j] = commutator(basis_[i], basis_[j]);
    }
  }

  std::map<std::pair<int, Monomial>, int, KeyLess> key_index;
  auto scan = [&key_index](const VectorField& v) {
    auto comps = components(v);
    for (int c = 0; c < 3; ++c) {
      for (const auto& [m, coeff] : comps[c].terms()) key_index.emplace(std::pair{c, m}, 0);
    }
  };
  for (const auto& v : basis_) scan(v);
  for (const auto& row : br) {
    for (const auto& v : row) scan(v);
  }
  int next = 0;
  for (auto& [key, id] : key_index) {
    keys_.push_back(key);
    id = next++;
  }

  auto flatten = [&key_index](const VectorField& v) {
    Row r(key_index.size(), Rational(0));
    auto comps = components(v);
    for (int c = 0; c < 3; ++c) {
      for (const auto& [m, coeff] : comps[c].terms()) r[key_index.at({c, m})] = coeff;
    }
    return r;
  };
  for (const auto& v : basis_) flat_.push_back(flatten(v));
  if (subspace_rank(flat_) != n) throw Error("basis fields are linearly dependent");

  // Solve flat^T c = bracket for every pair. Consistency of the solve is
  // exactly closure under the bracket.
  Matrix lhs(keys_.size(), Row(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < keys_.size(); ++r) lhs[r][j] = flat_[j][r];
  }

  table_.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto coords = solve(lhs, flatten(br[i][j]));
      if (!coords) {
        throw UnsupportedError("[" + to_string(basis_[i]) + ", " + to_string(basis_[j]) +
                               "] leaves the span of the basis");
      }
      for (int k = 0; k < n; ++k) {
        table_[(static_cast<std::size_t>(i) * n + j) * n + k] = (*coords)[k];
      }
    }
  }

  // The table must be antisymmetric and satisfy Jacobi; violations would
  // be bugs in the bracket, not bad input.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) throw InternalError("structure constants not antisymmetric");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          Rational s(0);
          for (int l = 0; l < n; ++l) {
            s += c(i, j, l) * c(l, k, m);
            s += c(j, k, l) * c(l, i, m);
            s += c(k, i, l) * c(l, j, m);
          }
          if (s != 0) throw InternalError("structure constants violate the Jacobi identity");
        }
      }
    }
  }
}

const Rational& LieAlgebra::c(int i, int j, int k) const {
  const int n = dimension();
  return table_[(static_cast<std::size_t>(i) * n + j) * n + k];
}

const Rational& LieAlgebra::structure(int i, int j, int k) const {
  const int n = dimension();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
    throw Error("structure constant index out of range");
  }
  return c(i, j, k);
}

VectorField LieAlgebra::bracket_field(int i, int j) const {
  VectorField out;
  for (int k = 0; k < dimension(); ++k) {
    out = out + scale(structure(i, j, k), basis_[k]);
  }
  return out;
}

Row LieAlgebra::bracket(const Row& u, const Row& w) const {
  const int n = dimension();
  if (static_cast<int>(u.size()) != n || static_cast<int>(w.size()) != n) {
    throw Error("coordinate vector size mismatch");
  }
  Row out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      for (int k = 0; k < n; ++k) out[k] += u[i] * w[j] * c(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Row& v) const {
  const int n = dimension();
  Matrix m(n, Row(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    Row ej(n, Rational(0));
    ej[j] = 1;
    Row col = bracket(v, ej);
    for (int k = 0; k < n; ++k) m[k][j] = col[k];
  }
  return m;
}

std::optional<Row> LieAlgebra::coordinates(const VectorField& v) const {
  std::map<std::pair<int, Monomial>, int, KeyLess> key_index;
  for (std::size_t r = 0; r < keys_.size(); ++r) key_index.emplace(keys_[r], static_cast<int>(r));

  Row target(keys_.size(), Rational(0));
  auto comps = components(v);
  for (int c = 0; c < 3; ++c) {
    for (const auto& [m, coeff] : comps[c].terms()) {
      auto it = key_index.find({c, m});
      if (it == key_index.end()) return std::nullopt;  // monomial outside the span
      target[it->second] = coeff;
    }
  }
  Matrix lhs(keys_.size(), Row(dimension(), Rational(0)));
  for (int j = 0; j < dimension(); ++j) {
    for (std::size_t r = 0; r < keys_.size(); ++r) lhs[r][j] = flat_[j][r];
  }
  return solve(lhs, target);
}

bool LieAlgebra::is_subalgebra(const std::vector<Row>& vectors) const {
  Matrix span = vectors;
  const int base_rank = subspace_rank(span);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      Matrix extended = span;
      extended.push_back(bracket(vectors[i], vectors[j]));
      if (subspace_rank(extended) != base_rank) return false;
    }
  }
  return true;
}

namespace {

// Span of all brackets [u, w], u in left, w in right, as rref rows.
Matrix bracket_span(const LieAlgebra& L, const Matrix& left, const Matrix& right) {
  Matrix rows;
  for (const Row& u : left) {
    for (const Row& w : right) {
      Row b = L.bracket(u, w);
      if (!is_zero_row(b)) rows.push_back(std::move(b));
    }
  }
  if (rows.empty()) return {};
  return rref(rows).m;
}

Matrix full_basis(int n) {
  Matrix m(n, Row(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SeriesReport series(const LieAlgebra& L) {
  SeriesReport out;
  const Matrix full = full_basis(L.dimension());

  Matrix derived = full;
  for (int step = 1; step <= L.dimension() + 1; ++step) {
    derived = bracket_span(L, derived, derived);
    out.derived_dims.push_back(static_cast<int>(derived.size()));
    if (derived.empty()) {
      out.solvable = true;
      out.derived_length = step;
      break;
    }
    if (out.derived_dims.size() >= 2 &&
        out.derived_dims.back() == out.derived_dims[out.derived_dims.size() - 2]) {
      break;  // stabilized above zero
    }
  }

  Matrix central = full;
  for (int step = 1; step <= L.dimension() + 1; ++step) {
    central = bracket_span(L, full, central);
    out.lower_central_dims.push_back(static_cast<int>(central.size()));
    if (central.empty()) {
      out.nilpotent = true;
      out.nilpotency_class = step;
      break;
    }
    if (out.lower_central_dims.size() >= 2 &&
        out.lower_central_dims.back() ==
            out.lower_central_dims[out.lower_central_dims.size() - 2]) {
      break;
    }
  }
  return out;
}

namespace {

bool is_zero_matrix(const Matrix& m) {
  return std::all_of(m.begin(), m.end(), is_zero_row);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, Row(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// Powers of -ad up to nilpotency or the requested truncation.
std::vector<Matrix> neg_ad_powers(const LieAlgebra& L, int generator, std::optional<int> truncation,
                                  bool* exact) {
  const int n = L.dimension();
  Row v(n, Rational(0));
  v.at(generator) = 1;
  Matrix neg_ad = L.ad(v);
  for (auto& row : neg_ad) {
    for (auto& x : row) x = -x;
  }

  std::vector<Matrix> powers = {full_basis(n)};
  *exact = false;
  const int limit = truncation.value_or(n);
  for (int k = 1; k <= limit; ++k) {
    Matrix next = mat_mul(powers.back(), neg_ad);
    if (is_zero_matrix(next)) {
      *exact = true;
      break;
    }
    powers.push_back(std::move(next));
  }
  // A nilpotent n x n matrix dies by power n, so surviving that long means
  // the series is genuinely infinite.
  if (!*exact && !truncation) {
    throw UnsupportedError("ad(generator) is not nilpotent; pass a truncation order");
  }
  return powers;
}

}  // namespace

AdjointMatrix adjoint_matrix(const LieAlgebra& L, int generator, const Expr& eps,
                             std::optional<int> truncation) {
  if (generator < 0 || generator >= L.dimension()) throw Error("generator index out of range");
  bool exact = false;
  auto powers = neg_ad_powers(L, generator, truncation, &exact);

  const int n = L.dimension();
  AdjointMatrix out;
  out.exact = exact;
  out.terms = static_cast<int>(powers.size());
  out.entries.assign(n, std::vector<Expr>(n));

  std::vector<Expr> eps_pow = {Expr::constant(1)};
  for (std::size_t m = 1; m < powers.size(); ++m) {
    eps_pow.push_back(eps_pow.back() * eps);
  }
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      std::vector<Expr> terms;
      Rational fact(1);
      for (std::size_t m = 0; m < powers.size(); ++m) {
        if (m > 0) fact *= static_cast<long>(m);
        const Rational& entry = powers[m][k][j];
        if (entry == 0) continue;
        terms.push_back(Expr::constant(entry / fact) * eps_pow[m]);
      }
      out.entries[k][j] = to_expr(expand(Expr::sum(std::move(terms))));
    }
  }
  return out;
}

Row adjoint_apply(const LieAlgebra& L, int generator, const Rational& eps, const Row& w) {
  if (generator < 0 || generator >= L.dimension()) throw Error("generator index out of range");
  bool exact = false;
  auto powers = neg_ad_powers(L, generator, std::nullopt, &exact);

  const int n = L.dimension();
  Row out(n, Rational(0));
  Rational fact(1);
  Rational eps_pow(1);
  for (std::size_t m = 0; m < powers.size(); ++m) {
    if (m > 0) {
      fact *= static_cast<long>(m);
      eps_pow *= eps;
    }
    for (int k = 0; k < n; ++k) {
      Rational dot(0);
      for (int j = 0; j < n; ++j) {
        if (powers[m][k][j] != 0 && w[j] != 0) dot += powers[m][k][j] * w[j];
      }
      out[k] += eps_pow / fact * dot;
    }
  }
  return out;
}

}  // namespace liesym
