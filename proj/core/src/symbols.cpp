#include "liesym/symbols.hpp"

#include "liesym/errors.hpp"

namespace liesym {

Symbol sym_x() { return Symbol{"x", SymbolKind::Independent}; }
Symbol sym_t() { return Symbol{"t", SymbolKind::Independent}; }

Symbol param(std::string name) {
  if (name.empty()) {
    throw Error("parameter with empty name");
  }
  return Symbol{std::move(name), SymbolKind::Parameter};
}

std::string jet_name(const JetVar& v) {
  std::string s = "u";
  if (v.dx == 0 && v.dt == 0) {
    return s;
  }
  s += '_';
  if (v.dx > 0) {
    s += 'x';
    if (v.dx > 1) s += std::to_string(v.dx);
  }
  if (v.dt > 0) {
    s += 't';
    if (v.dt > 1) s += std::to_string(v.dt);
  }
  return s;
}

namespace {

// Rank within the Symbol alternative: x, then t, then parameters.
int symbol_rank(const Symbol& s) {
  if (s.kind == SymbolKind::Independent) {
    return s.name == "x" ? 0 : 1;
  }
  return 3;  // after every jet
}

int cmp_int(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

int compare_vars(const VarRef& a, const VarRef& b) {
  // Collapse to a coarse rank first: x=0, t=1, jets=2, parameters=3.
  auto rank = [](const VarRef& v) {
    if (const auto* s = std::get_if<Symbol>(&v)) return symbol_rank(*s);
    return 2;
  };
  int ra = rank(a);
  int rb = rank(b);
  if (ra != rb) return cmp_int(ra, rb);
  if (ra == 2) {
    const auto& ja = std::get<JetVar>(a);
    const auto& jb = std::get<JetVar>(b);
    if (int c = cmp_int(ja.order(), jb.order())) return c;
    // Same total order: more x-derivatives first, so compare dt ascending.
    return cmp_int(ja.dt, jb.dt);
  }
  if (ra == 3) {
    const auto& sa = std::get<Symbol>(a);
    const auto& sb = std::get<Symbol>(b);
    return sa.name.compare(sb.name) < 0 ? -1 : (sa.name == sb.name ? 0 : 1);
  }
  return 0;  // both x, or both t
}

std::string var_name(const VarRef& v) {
  if (const auto* s = std::get_if<Symbol>(&v)) return s->name;
  return jet_name(std::get<JetVar>(v));
}

bool is_independent(const VarRef& v) {
  const auto* s = std::get_if<Symbol>(&v);
  return s && s->kind == SymbolKind::Independent;
}

bool is_parameter(const VarRef& v) {
  const auto* s = std::get_if<Symbol>(&v);
  return s && s->kind == SymbolKind::Parameter;
}

bool is_jet(const VarRef& v) { return std::holds_alternative<JetVar>(v); }

}  // namespace liesym
