#include "liesym/expr.hpp"

#include "liesym/errors.hpp"

#include <utility>

namespace liesym {

struct Expr::Node {
  Kind kind = Kind::Constant;
  Rational value;           // Constant
  VarRef var = JetVar{};    // Var
  std::vector<Expr> kids;   // Sum, Product; also the single base of Pow
  int exp = 0;              // Pow
};

namespace {

std::shared_ptr<const Expr::Node> make_constant_node(Rational v) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Constant;
  n->value = std::move(v);
  return n;
}

// The two constants that appear everywhere; shared so is_zero()/is_one()
// stay cheap and default construction allocates once per process.
const std::shared_ptr<const Expr::Node>& zero_node() {
  static const auto n = make_constant_node(Rational(0));
  return n;
}

const std::shared_ptr<const Expr::Node>& one_node() {
  static const auto n = make_constant_node(Rational(1));
  return n;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr Expr::constant(Rational value) {
  if (value == 0) return Expr(zero_node());
  if (value == 1) return Expr(one_node());
  return Expr(make_constant_node(std::move(value)));
}

Expr Expr::constant(long value) { return constant(Rational(value)); }

Expr Expr::variable(VarRef v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(v);
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  Rational acc(0);
  for (auto& t : terms) {
    switch (t.kind()) {
      case Kind::Constant:
        acc += t.constant_value();
        break;
      case Kind::Sum:
        for (const auto& k : t.operands()) {
          if (k.is_constant()) {
            acc += k.constant_value();
          } else {
            flat.push_back(k);
          }
        }
        break;
      default:
        flat.push_back(std::move(t));
    }
  }
  if (acc != 0) flat.push_back(constant(std::move(acc)));
  if (flat.empty()) return Expr();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->kids = std::move(flat);
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  Rational acc(1);
  for (auto& f : factors) {
    switch (f.kind()) {
      case Kind::Constant:
        if (f.constant_value() == 0) return Expr();
        acc *= f.constant_value();
        break;
      case Kind::Product:
        for (const auto& k : f.operands()) {
          if (k.is_constant()) {
            if (k.constant_value() == 0) return Expr();
            acc *= k.constant_value();
          } else {
            flat.push_back(k);
          }
        }
        break;
      default:
        flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return constant(std::move(acc));
  if (acc != 1) flat.insert(flat.begin(), constant(std::move(acc)));
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->kids = std::move(flat);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, int exponent) {
  if (exponent == 0) return constant(1);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    return constant(rational_pow(base.constant_value(), exponent));
  }
  if (base.kind() == Kind::Pow) {
    // (b^k)^e collapses; exponents are small, overflow is not a concern.
    return pow(base.base(), base.exponent() * exponent);
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->kids.push_back(std::move(base));
  n->exp = exponent;
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }

const Rational& Expr::constant_value() const {
  if (node_->kind != Kind::Constant) throw InternalError("constant_value on non-constant");
  return node_->value;
}

const VarRef& Expr::var() const {
  if (node_->kind != Kind::Var) throw InternalError("var on non-variable");
  return node_->var;
}

const std::vector<Expr>& Expr::operands() const {
  if (node_->kind != Kind::Sum && node_->kind != Kind::Product) {
    throw InternalError("operands on leaf or pow");
  }
  return node_->kids;
}

const Expr& Expr::base() const {
  if (node_->kind != Kind::Pow) throw InternalError("base on non-pow");
  return node_->kids.front();
}

int Expr::exponent() const {
  if (node_->kind != Kind::Pow) throw InternalError("exponent on non-pow");
  return node_->exp;
}

bool Expr::is_zero() const { return node_->kind == Kind::Constant && node_->value == 0; }

bool Expr::is_one() const { return node_->kind == Kind::Constant && node_->value == 1; }

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }

Expr operator-(const Expr& a, const Expr& b) {
  return Expr::sum({a, Expr::product({Expr::constant(-1), b})});
}

Expr operator-(const Expr& a) { return Expr::product({Expr::constant(-1), a}); }

Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }

namespace {

// If `e` is a constant or a product with a negative leading constant,
// returns the negated (positive) form so sums can print "a - b".
bool split_negative(const Expr& e, Expr* positive) {
  if (e.is_constant() && e.constant_value() < 0) {
    *positive = Expr::constant(-e.constant_value());
    return true;
  }
  if (e.kind() == Expr::Kind::Product) {
    const auto& ks = e.operands();
    if (ks.front().is_constant() && ks.front().constant_value() < 0) {
      std::vector<Expr> copy = ks;
      copy.front() = Expr::constant(-copy.front().constant_value());
      *positive = Expr::product(std::move(copy));
      return true;
    }
  }
  return false;
}

void print(const Expr& e, std::string* out);

void print_factor(const Expr& f, std::string* out) {
  bool paren = f.kind() == Expr::Kind::Sum ||
               (f.is_constant() && f.constant_value() < 0);
  if (paren) out->push_back('(');
  print(f, out);
  if (paren) out->push_back(')');
}

void print(const Expr& e, std::string* out) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      *out += to_string(e.constant_value());
      return;
    case Expr::Kind::Var:
      *out += var_name(e.var());
      return;
    case Expr::Kind::Sum: {
      bool first = true;
      for (const auto& t : e.operands()) {
        Expr positive;
        if (!first && split_negative(t, &positive)) {
          *out += " - ";
          print(positive, out);
        } else {
          if (!first) *out += " + ";
          print(t, out);
        }
        first = false;
      }
      return;
    }
    case Expr::Kind::Product: {
      const auto& ks = e.operands();
      std::size_t start = 0;
      // -1 * rest prints as a bare minus sign.
      if (ks.front().is_constant() && ks.front().constant_value() == -1 && ks.size() > 1) {
        *out += "-";
        start = 1;
      }
      // Factors with negative exponents move below a fraction bar, so
      // 1/(a*t) reads the way it is written on paper.
      std::vector<const Expr*> num;
      std::vector<Expr> den;
      for (std::size_t i = start; i < ks.size(); ++i) {
        const Expr& f = ks[i];
        if (f.kind() == Expr::Kind::Pow && f.exponent() < 0) {
          den.push_back(Expr::pow(f.base(), -f.exponent()));
        } else {
          num.push_back(&f);
        }
      }
      if (num.empty()) {
        *out += "1";
      } else {
        for (std::size_t i = 0; i < num.size(); ++i) {
          if (i > 0) *out += "*";
          print_factor(*num[i], out);
        }
      }
      if (!den.empty()) {
        *out += "/";
        if (den.size() > 1) out->push_back('(');
        for (std::size_t i = 0; i < den.size(); ++i) {
          if (i > 0) *out += "*";
          print_factor(den[i], out);
        }
        if (den.size() > 1) out->push_back(')');
      }
      return;
    }
    case Expr::Kind::Pow: {
      if (e.exponent() < 0) {
        *out += "1/";
        print(Expr::pow(e.base(), -e.exponent()), out);
        return;
      }
      const Expr& b = e.base();
      bool paren = b.kind() != Expr::Kind::Var;
      if (paren) out->push_back('(');
      print(b, out);
      if (paren) out->push_back(')');
      *out += "^";
      *out += std::to_string(e.exponent());
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, &out);
  return out;
}

}  // namespace liesym
