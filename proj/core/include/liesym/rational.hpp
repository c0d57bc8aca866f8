#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace liesym {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. The canonical form (positive denominator,
/// coprime numerator and denominator, zero stored as 0/1) is maintained
/// by boost; everything in this library relies on it.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with the sign moved into the numerator. Throws Error
/// on a zero denominator. Prefer this over the two-argument Rational
/// constructor, which rejects negative denominators outright.
Rational make_rational(BigInt num, BigInt den);

/// base^exp for any integer exp. Negative exponents invert; 0^negative
/// throws Error.
Rational rational_pow(const Rational& base, long exp);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// -1, 0 or +1.
int sign(const Rational& q);

}  // namespace liesym
