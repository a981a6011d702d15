#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toricred {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

}  // namespace toricred
