#include "liesym/determine.hpp"

#include "liesym/errors.hpp"

#include <algorithm>
#include <set>

namespace liesym {

namespace {

Monomial xtu_monomial(int i, int j, int k) {
  Monomial m;
  if (i) m = m.times(Monomial::variable(VarRef(sym_x()), i));
  if (j) m = m.times(Monomial::variable(VarRef(sym_t()), j));
  if (k) m = m.times(Monomial::variable(VarRef(JetVar{0, 0}), k));
  return m;
}

}  // namespace

Ansatz::Ansatz(int degree) : degree_(degree) {
  if (degree < 0) throw Error("negative ansatz degree");
  for (int total = 0; total <= degree; ++total) {
    for (int i = total; i >= 0; --i) {
      for (int j = total - i; j >= 0; --j) {
        monomials_.push_back(xtu_monomial(i, j, total - i - j));
      }
    }
  }
}

int Ansatz::index(int component, const Monomial& m) const {
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    if (monomials_[k] == m) {
      return component * static_cast<int>(monomials_.size()) + static_cast<int>(k);
    }
  }
  throw Error("monomial " + m.str() + " is not part of the ansatz");
}

std::string Ansatz::label(int column) const {
  const int n = static_cast<int>(monomials_.size());
  static const char* kComponents[] = {"xi", "eta", "phi"};
  if (column < 0 || column >= 3 * n) throw Error("ansatz column out of range");
  return std::string(kComponents[column / n]) + ":" + monomials_[column % n].str();
}

VectorField Ansatz::field_from(const Row& coords) const {
  const std::size_t n = monomials_.size();
  if (coords.size() != 3 * n) throw Error("coordinate vector does not match the ansatz");
  VectorField out;
  for (int comp = 0; comp < 3; ++comp) {
    Poly p;
    for (std::size_t k = 0; k < n; ++k) {
      p += Poly::term(coords[comp * n + k], monomials_[k]);
    }
    (comp == 0 ? out.xi : comp == 1 ? out.eta : out.phi) = to_expr(p);
  }
  return out;
}

DeterminingSystem determining_system(const EvolutionPDE& pde, const Ansatz& ansatz,
                                     int max_jet_order) {
  if (!pde.parameters().empty()) {
    throw Error("determining_system needs a parameter-free equation; instantiate first");
  }

  const auto& mons = ansatz.monomials();
  const int n = static_cast<int>(mons.size());
  JetReducer reducer(pde, max_jet_order);

  // The invariance condition is linear in the generator, so running one
  // unit field per unknown through prolongation and reduction yields the
  // columns of the system directly.
  std::map<Monomial, Row, MonomialLess> coefficient_rows;
  for (int comp = 0; comp < 3; ++comp) {
    for (int mi = 0; mi < n; ++mi) {
      VectorField unit;
      Expr mono = to_expr(Poly::term(Rational(1), mons[mi]));
      (comp == 0 ? unit.xi : comp == 1 ? unit.eta : unit.phi) = mono;

      Prolongation pr(unit, pde.order(), max_jet_order);
      Poly condition = reducer.reduce(apply_prolonged(pr, pde.delta(), max_jet_order));

      const int col = comp * n + mi;
      for (const auto& [m, c] : condition.terms()) {
        auto [it, fresh] = coefficient_rows.try_emplace(m, Row(3 * n, Rational(0)));
        it->second[col] = c;
      }
    }
  }

  DeterminingSystem out;
  out.unknowns = 3 * n;
  out.raw_rows = coefficient_rows.size();

  std::set<Row> seen;
  for (auto& [m, row] : coefficient_rows) {
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& c) { return c != 0; });
    if (lead == row.end()) continue;
    const Rational inv = Rational(1) / *lead;
    for (auto& c : row) c *= inv;
    if (seen.insert(row).second) out.rows.push_back(std::move(row));
  }
  return out;
}

PointSolution solve_at_point(const EvolutionPDE& pde, const Ansatz& ansatz,
                             const ParameterPoint& point, int max_jet_order) {
  EvolutionPDE fixed = pde.parameters().empty() ? pde : pde.instantiated(point);
  PointSolution out;
  out.system = determining_system(fixed, ansatz, max_jet_order);
  Rref r = rref(out.system.rows);
  out.pivot_cols = r.pivot_cols;

  std::vector<bool> is_pivot(out.system.unknowns, false);
  for (int p : out.pivot_cols) is_pivot[p] = true;
  for (int f = 0; f < out.system.unknowns; ++f) {
    if (is_pivot[f]) continue;
    Row v(out.system.unknowns, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
      v[out.pivot_cols[i]] = -r.m[i][f];
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

namespace {

int valuation(BigInt n, const BigInt& p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_small_prime(const BigInt& n) {
  if (n < 2) return false;
  for (BigInt d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const Rational& point_value(const ParameterPoint& pt, const std::string& name) {
  auto it = pt.find(name);
  if (it == pt.end()) throw Error("parameter point has no value for '" + name + "'");
  return it->second;
}

void validate_points(const std::vector<Symbol>& params, const ParameterPoint& p1,
                     const ParameterPoint& p2) {
  std::set<BigInt> primes;
  for (const Symbol& s : params) {
    const Rational& v1 = point_value(p1, s.name);
    const Rational& v2 = point_value(p2, s.name);
    if (v1 == 0) throw Error("parameter '" + s.name + "' is zero at the first point");
    if (v1 == v2) {
      throw Error("parameter '" + s.name + "' has the same value at both points");
    }
    if (denominator(v2) != 1 || !is_small_prime(numerator(v2))) {
      throw Error("second-point value of '" + s.name + "' must be a prime integer");
    }
    if (!primes.insert(numerator(v2)).second) {
      throw Error("second-point values must be distinct primes");
    }
  }
  // The prime read-off below also needs the second-point primes to stay
  // out of every first-point value.
  for (const Symbol& s : params) {
    const BigInt q = numerator(point_value(p2, s.name));
    for (const Symbol& other : params) {
      const Rational& v1 = point_value(p1, other.name);
      if (numerator(v1) % q == 0 || denominator(v1) % q == 0) {
        throw Error("prime " + q.str() + " for '" + s.name +
                    "' divides the first-point value of '" + other.name + "'");
      }
    }
  }
}

}  // namespace

Poly fit_parameter_monomial(const Rational& value1, const Rational& value2,
                            const std::vector<Symbol>& params, const ParameterPoint& p1,
                            const ParameterPoint& p2) {
  if (value1 == 0 && value2 == 0) return Poly();
  if (value1 == 0 || value2 == 0) {
    throw MismatchError("kernel entry vanishes at exactly one parameter point");
  }

  const Rational ratio = value2 / value1;
  Monomial m;
  Rational scale = value1;
  Rational at_p2(1);
  for (const Symbol& s : params) {
    const BigInt q = numerator(point_value(p2, s.name));
    int e = valuation(numerator(ratio), q) - valuation(denominator(ratio), q);
    if (e == 0) continue;
    m = m.times(Monomial::variable(VarRef(s), e));
    scale /= rational_pow(point_value(p1, s.name), e);
    at_p2 *= rational_pow(point_value(p2, s.name), e);
  }
  if (scale * at_p2 != value2) {
    throw MismatchError("kernel entry is not a parameter monomial: " + to_string(value1) +
                        " vs " + to_string(value2));
  }
  return Poly::term(scale, m);
}

SymmetryBasis solve_symmetries(const EvolutionPDE& pde, int degree, const ParameterPoint& p1,
                               const ParameterPoint& p2, int max_jet_order) {
  const Ansatz ansatz(degree);
  const std::vector<Symbol> params = pde.parameters();
  validate_points(params, p1, p2);

  PointSolution s1 = solve_at_point(pde, ansatz, p1, max_jet_order);
  PointSolution s2 = solve_at_point(pde, ansatz, p2, max_jet_order);
  if (s1.pivot_cols != s2.pivot_cols) {
    throw MismatchError("determining systems disagree between the parameter points; "
                        "one of them is likely degenerate");
  }

  SymmetryBasis out;
  out.degree = degree;
  out.unknowns = s1.system.unknowns;
  out.raw_rows = s1.system.raw_rows;
  out.rows = s1.system.rows.size();
  out.point1 = p1;
  out.point2 = p2;

  const int cols = s1.system.unknowns;
  for (std::size_t k = 0; k < s1.kernel.size(); ++k) {
    std::vector<Poly> entries(cols);
    for (int j = 0; j < cols; ++j) {
      entries[j] = fit_parameter_monomial(s1.kernel[k][j], s2.kernel[k][j], params, p1, p2);
    }
    // Normalize: earliest nonzero coordinate becomes 1. Entries are single
    // terms, so the division is exact.
    for (int j = 0; j < cols; ++j) {
      if (entries[j].is_zero()) continue;
      Poly inv = entries[j].pow(-1);
      for (int l = 0; l < cols; ++l) {
        if (!entries[l].is_zero()) entries[l] = entries[l] * inv;
      }
      break;
    }
    out.kernel.push_back(std::move(entries));
  }

  const auto& mons = ansatz.monomials();
  const int n = static_cast<int>(mons.size());
  for (const auto& entries : out.kernel) {
    VectorField v;
    for (int comp = 0; comp < 3; ++comp) {
      Poly p;
      for (int mi = 0; mi < n; ++mi) {
        p += entries[comp * n + mi] * Poly::term(Rational(1), mons[mi]);
      }
      (comp == 0 ? v.xi : comp == 1 ? v.eta : v.phi) = to_expr(p);
    }
    out.fields.push_back(std::move(v));
  }

  // Safety net: the reconstructed generators must satisfy the symmetry
  // condition with the parameters left symbolic.
  JetReducer reducer(pde, max_jet_order);
  for (const auto& v : out.fields) {
    Prolongation pr(v, pde.order(), max_jet_order);
    Poly condition = reducer.reduce(apply_prolonged(pr, pde.delta(), max_jet_order));
    if (!condition.is_zero()) {
      throw MismatchError("reconstructed generator fails the symbolic symmetry check: " +
                          to_string(v));
    }
  }
  return out;
}

}  // namespace liesym
