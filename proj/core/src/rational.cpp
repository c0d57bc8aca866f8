#include "liesym/rational.hpp"

#include "liesym/errors.hpp"

namespace liesym {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw Error("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) {
    return Rational(1);
  }
  bool invert = exp < 0;
  unsigned long n = invert ? -static_cast<unsigned long>(exp) : static_cast<unsigned long>(exp);
  if (invert && base == 0) {
    throw Error("zero raised to a negative power");
  }
  Rational acc(1);
  Rational sq = base;
  while (n > 0) {
    if (n & 1) {
      acc *= sq;
    }
    sq *= sq;
    n >>= 1;
  }
  return invert ? Rational(1) / acc : acc;
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

int sign(const Rational& q) {
  if (q < 0) return -1;
  if (q > 0) return 1;
  return 0;
}

}  // namespace liesym
