#include "liesym/parser.hpp"

#include "liesym/errors.hpp"
#include "liesym/poly.hpp"

#include <cctype>
#include <string>

namespace liesym {

namespace {

// Recursive descent over a string_view. Position tracking is the whole
// point of keeping this hand-rolled; every throw carries an offset.
struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  ParseOptions opts;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what, pos);
  }

  long read_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number", start);
    if (pos - start > 9) fail("numeric literal too long", start);
    return std::stol(std::string(text.substr(start, pos - start)));
  }

  // Digits glued to the current position; no whitespace skipping, since
  // "u_x 3" must not read as u_x3.
  int read_adjacent_digits() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a digit", start);
    if (pos - start > 3) fail("jet count too large", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  // dx/dt pieces inside a jet spelling: x, x3, x^3 (caret form is braced only).
  int read_jet_count(bool braced) {
    if (braced && pos < text.size() && text[pos] == '^') {
      ++pos;
      return read_adjacent_digits();
    }
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return read_adjacent_digits();
    }
    return 1;
  }

  JetVar read_jet_suffix(bool braced, std::size_t name_start) {
    JetVar j;
    bool any = false;
    while (true) {
      if (braced) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
      }
      if (pos >= text.size()) break;
      char c = text[pos];
      if (c == 'x') {
        if (j.dx != 0 || j.dt != 0) fail("derivative letters out of order in jet variable", pos);
        ++pos;
        j.dx = read_jet_count(braced);
        any = true;
      } else if (c == 't') {
        if (j.dt != 0) fail("repeated 't' in jet variable", pos);
        ++pos;
        j.dt = read_jet_count(braced);
        any = true;
      } else {
        break;
      }
    }
    if (!any) fail("empty derivative suffix on u", name_start);
    if (j.order() > opts.max_jet_order) {
      fail("jet order " + std::to_string(j.order()) + " exceeds the cap " +
               std::to_string(opts.max_jet_order),
           name_start);
    }
    return j;
  }

  Expr read_identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '{' || text[pos] == '}')) {
      // '_' introduces a jet suffix only after a lone 'u'; handled below by
      // re-scanning. Collect conservatively first.
      if (text[pos] == '{' || text[pos] == '}') break;
      ++pos;
    }
    std::string word(text.substr(start, pos - start));
    if (word.empty()) fail("expected an identifier", start);

    if (word == "u") {
      // Possibly "u_{...}"; a plain "u" is the dependent variable itself.
      if (pos < text.size() && text[pos] == '{') {
        fail("expected '_' before '{' in jet variable", pos);
      }
      return Expr::jet(JetVar{0, 0});
    }
    if (word.rfind("u_", 0) == 0) {
      // Compact jet spelling: re-scan the suffix from just after "u_".
      pos = start + 2;
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        JetVar j = read_jet_suffix(/*braced=*/true, start);
        expect('}', "to close jet variable");
        return Expr::jet(j);
      }
      JetVar j = read_jet_suffix(/*braced=*/false, start);
      // The suffix scan may stop early (e.g. "u_x3q"); anything alnum left
      // glued on is an error, not a new token.
      if (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        fail("unexpected character in jet variable", pos);
      }
      return Expr::jet(j);
    }
    if (word == "x") return Expr::symbol(sym_x());
    if (word == "t") return Expr::symbol(sym_t());
    if (word.front() == '_' || std::isdigit(static_cast<unsigned char>(word.front()))) {
      fail("malformed identifier '" + word + "'", start);
    }
    return Expr::symbol(param(word));
  }

  int read_exponent() {
    skip_ws();
    if (consume('(')) {
      bool neg = consume('-');
      long v = read_digits();
      expect(')', "to close exponent");
      return static_cast<int>(neg ? -v : v);
    }
    return static_cast<int>(read_digits());
  }

  Expr parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input", pos);
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Expr::constant(read_digits());
    }
    if (c == '(') {
      ++pos;
      Expr inner = parse_sum();
      expect(')', "to close parenthesis");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return read_identifier();
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (consume('^')) {
      std::size_t at = pos;
      Expr result = Expr::pow(base, read_exponent());
      if (peek() == '^') fail("chained '^' needs parentheses", at);
      return result;
    }
    return base;
  }

  Expr parse_signed() {
    bool neg = false;
    while (true) {
      if (consume('-')) {
        neg = !neg;
      } else if (consume('+')) {
        // ignore
      } else {
        break;
      }
    }
    Expr e = parse_power();
    return neg ? -e : e;
  }

  Expr parse_term() {
    Expr acc = parse_signed();
    while (true) {
      if (consume('*')) {
        acc = acc * parse_signed();
      } else if (peek() == '/') {
        std::size_t at = pos;
        ++pos;
        Expr den = parse_signed();
        try {
          acc = divide(acc, den);
        } catch (const UnsupportedError& err) {
          fail(err.what(), at);
        }
      } else {
        break;
      }
    }
    return acc;
  }

  Expr parse_sum() {
    Expr acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

Expr parse_expr(std::string_view text, const ParseOptions& opts) {
  Parser p{text, 0, opts};
  Expr e = p.parse_sum();
  if (!p.at_end()) p.fail("trailing input", p.pos);
  return e;
}

Expr parse_equation(std::string_view text, const ParseOptions& opts) {
  Parser p{text, 0, opts};
  Expr lhs = p.parse_sum();
  if (p.at_end()) return lhs;
  p.expect('=', "between the sides of the equation");
  Expr rhs = p.parse_sum();
  if (!p.at_end()) p.fail("trailing input", p.pos);
  return lhs - rhs;
}

}  // namespace liesym
