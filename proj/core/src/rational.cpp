#include "toricred/rational.hpp"

#include <cmath>

#include "toricred/errors.hpp"

namespace toricred {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  }
  if (q.get_den() == 0) throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

double to_double(const Rational& q) { return q.get_d(); }

long double to_long_double(const Rational& q) {
  // mpq_get_d loses range for large numerators; split into exponent and mantissa.
  if (q == 0) return 0.0L;
  long exp_num = 0;
  long exp_den = 0;
  double mn = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(exp_num - exp_den));
}

}  // namespace toricred
