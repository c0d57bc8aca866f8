#include "liesym/poly.hpp"

#include "liesym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace liesym {

Monomial Monomial::variable(VarRef v, int exp) {
  Monomial m;
  if (exp != 0) m.factors_.emplace_back(std::move(v), exp);
  return m;
}

int Monomial::exponent_of(const VarRef& v) const {
  for (const auto& [var, exp] : factors_) {
    int c = compare_vars(var, v);
    if (c == 0) return exp;
    if (c > 0) break;  // sorted, gone past
  }
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end()) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end()) {
      out.factors_.push_back(*b++);
    } else {
      int c = compare_vars(a->first, b->first);
      if (c < 0) {
        out.factors_.push_back(*a++);
      } else if (c > 0) {
        out.factors_.push_back(*b++);
      } else {
        int e = a->second + b->second;
        if (e != 0) out.factors_.emplace_back(a->first, e);
        ++a;
        ++b;
      }
    }
  }
  return out;
}

Monomial Monomial::pow(int e) const {
  Monomial out;
  if (e == 0) return out;
  out.factors_ = factors_;
  for (auto& [var, exp] : out.factors_) exp *= e;
  return out;
}

Monomial Monomial::without(const VarRef& v) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (compare_vars(f.first, v) != 0) out.factors_.push_back(f);
  }
  return out;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [var, exp] : factors_) d += exp;
  return d;
}

bool Monomial::has_negative_exponent() const {
  for (const auto& [var, exp] : factors_) {
    if (exp < 0) return true;
  }
  return false;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [var, exp] : factors_) {
    if (!s.empty()) s += "*";
    s += var_name(var);
    if (exp != 1) {
      s += "^";
      s += std::to_string(exp);
    }
  }
  return s;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  int da = a.total_degree();
  int db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
    int c = compare_vars(fa[i].first, fb[i].first);
    if (c != 0) return c;
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second ? -1 : 1;
  }
  if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
  return 0;
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
  return p;
}

Poly Poly::variable(VarRef v, int exp) {
  return term(Rational(1), Monomial::variable(std::move(v), exp));
}

Poly Poly::term(Rational c, Monomial m) {
  Poly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(ma.times(mb), ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::pow(int e) const {
  if (e == 0) return constant(Rational(1));
  if (e < 0) {
    if (terms_.size() != 1) {
      throw UnsupportedError("negative power of a polynomial with " +
                             std::to_string(terms_.size()) + " terms");
    }
    const auto& [m, c] = *terms_.begin();
    return term(rational_pow(c, e), m.pow(e));
  }
  Poly acc = constant(Rational(1));
  Poly sq = *this;
  unsigned n = static_cast<unsigned>(e);
  while (n > 0) {
    if (n & 1) acc *= sq;
    sq *= sq;
    n >>= 1;
  }
  return acc;
}

Poly Poly::substituted(const VarRef& v, const Poly& replacement) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Poly piece = term(c, m.without(v));
    piece *= replacement.pow(e);  // handles negative e via the single-term rule
    out += piece;
  }
  return out;
}

Poly Poly::derived(const std::function<Poly(const VarRef&)>& image) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, exp] : m.factors()) {
      Poly img = image(var);
      if (img.is_zero()) continue;
      // c * exp * m / var * image(var)
      Poly piece = term(c * exp, m.times(Monomial::variable(var, -1)));
      piece *= img;
      out += piece;
    }
  }
  return out;
}

double Poly::eval_double(const std::function<double(const VarRef&)>& env) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = to_double(c);
    for (const auto& [var, exp] : m.factors()) {
      v *= std::pow(env(var), exp);
    }
    acc += v;
  }
  return acc;
}

Rational Poly::eval_rational(const std::function<Rational(const VarRef&)>& env) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [var, exp] : m.factors()) {
      v *= rational_pow(env(var), exp);
    }
    acc += v;
  }
  return acc;
}

bool Poly::depends_on(const VarRef& v) const {
  for (const auto& [m, c] : terms_) {
    if (m.exponent_of(v) != 0) return true;
  }
  return false;
}

std::vector<VarRef> Poly::variables() const {
  std::set<VarRef, VarLess> seen;
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, exp] : m.factors()) seen.insert(var);
  }
  return {seen.begin(), seen.end()};
}

int Poly::max_jet_order() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, exp] : m.factors()) {
      if (const auto* j = std::get_if<JetVar>(&var)) {
        best = std::max(best, j->order());
      }
    }
  }
  return best;
}

Poly operator+(Poly a, const Poly& b) {
  a += b;
  return a;
}
Poly operator-(Poly a, const Poly& b) {
  a -= b;
  return a;
}
Poly operator-(const Poly& a) {
  Poly out = a;
  out *= Rational(-1);
  return out;
}
Poly operator*(const Poly& a, const Poly& b) {
  Poly out = a;
  out *= b;
  return out;
}
Poly operator*(const Rational& c, Poly p) {
  p *= c;
  return p;
}

Poly expand(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return Poly::constant(e.constant_value());
    case Expr::Kind::Var:
      return Poly::variable(e.var());
    case Expr::Kind::Sum: {
      Poly out;
      for (const auto& t : e.operands()) out += expand(t);
      return out;
    }
    case Expr::Kind::Product: {
      Poly out = Poly::constant(Rational(1));
      for (const auto& f : e.operands()) out *= expand(f);
      return out;
    }
    case Expr::Kind::Pow:
      return expand(e.base()).pow(e.exponent());
  }
  throw InternalError("unhandled expression kind in expand");
}

Expr to_expr(const Poly& p) {
  std::vector<Expr> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Expr> factors;
    factors.push_back(Expr::constant(c));
    for (const auto& [var, exp] : m.factors()) {
      factors.push_back(Expr::pow(Expr::variable(var), exp));
    }
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Expr divide(const Expr& num, const Expr& den) {
  Poly d = expand(den);
  if (d.is_zero()) {
    throw UnsupportedError("division by zero");
  }
  if (d.term_count() != 1) {
    throw UnsupportedError("division by a sum of " + std::to_string(d.term_count()) +
                           " terms; only single-term divisors are invertible here");
  }
  const auto& [m, c] = *d.terms().begin();
  std::vector<Expr> factors;
  factors.push_back(num);
  factors.push_back(Expr::constant(Rational(1) / c));
  for (const auto& [var, exp] : m.factors()) {
    factors.push_back(Expr::pow(Expr::variable(var), -exp));
  }
  return Expr::product(std::move(factors));
}

bool equivalent(const Expr& a, const Expr& b) { return expand(a - b).is_zero(); }

Poly diff_partial(const Poly& p, const VarRef& v) {
  return p.derived([&v](const VarRef& w) {
    return compare_vars(v, w) == 0 ? Poly::constant(Rational(1)) : Poly();
  });
}

Expr diff_partial(const Expr& e, const VarRef& v) { return to_expr(diff_partial(expand(e), v)); }

namespace {

JetVar stepped(const JetVar& j, Direction dir, int max_order) {
  JetVar out = j;
  if (dir == Direction::X) {
    out.dx += 1;
  } else {
    out.dt += 1;
  }
  if (out.order() > max_order) {
    throw OrderError("total derivative needs " + jet_name(out) + " beyond the jet order cap " +
                     std::to_string(max_order));
  }
  return out;
}

}  // namespace

Poly total_derivative(const Poly& p, Direction dir, int max_order) {
  const Symbol base = dir == Direction::X ? sym_x() : sym_t();
  return p.derived([&](const VarRef& v) -> Poly {
    if (const auto* s = std::get_if<Symbol>(&v)) {
      if (s->kind == SymbolKind::Independent && s->name == base.name) {
        return Poly::constant(Rational(1));
      }
      return Poly();
    }
    return Poly::variable(VarRef(stepped(std::get<JetVar>(v), dir, max_order)));
  });
}

Expr total_derivative(const Expr& e, Direction dir, int max_order) {
  return to_expr(total_derivative(expand(e), dir, max_order));
}

Expr substitute(const Expr& e, const VarRef& target, const Expr& replacement) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Var:
      return vars_equal(e.var(), target) ? replacement : e;
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
      std::vector<Expr> kids;
      kids.reserve(e.operands().size());
      bool changed = false;
      for (const auto& k : e.operands()) {
        kids.push_back(substitute(k, target, replacement));
        changed = changed || !kids.back().same_node(k);
      }
      if (!changed) return e;  // untouched subtrees stay shared
      return e.kind() == Expr::Kind::Sum ? Expr::sum(std::move(kids))
                                         : Expr::product(std::move(kids));
    }
    case Expr::Kind::Pow: {
      Expr b = substitute(e.base(), target, replacement);
      if (b.same_node(e.base())) return e;
      return Expr::pow(std::move(b), e.exponent());
    }
  }
  throw InternalError("unhandled expression kind in substitute");
}

bool depends_on(const Expr& e, const VarRef& v) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return false;
    case Expr::Kind::Var:
      return vars_equal(e.var(), v);
    case Expr::Kind::Sum:
    case Expr::Kind::Product:
      for (const auto& k : e.operands()) {
        if (depends_on(k, v)) return true;
      }
      return false;
    case Expr::Kind::Pow:
      return depends_on(e.base(), v);
  }
  throw InternalError("unhandled expression kind in depends_on");
}

}  // namespace liesym
