#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricred/mpoly.hpp"
#include "toricred/rational.hpp"

namespace toricred {

/// Dense univariate polynomial over the rationals, ascending coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs, std::string variable = "t");
  static UPoly monomial(int degree, const Rational& c, std::string variable = "t");

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const std::string& variable() const noexcept { return var_; }
  void set_variable(std::string v) { var_ = std::move(v); }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading_coefficient() const;
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Primitive integer-coefficient multiple with positive leading coefficient.
  UPoly primitive() const;
  /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  UPoly shift_down(int k) const;
  /// p(c * t) and p(t + c).
  UPoly scale_argument(const Rational& c) const;
  UPoly translate(const Rational& c) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  UPoly pow(unsigned k) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;
  MPoly to_mpoly(const std::vector<std::string>& variables, std::size_t var) const;

 private:
  void trim();
  std::vector<Rational> c_;
  std::string var_ = "t";
};

/// Quotient and remainder over the rationals.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly polynomial_gcd(const UPoly& f, const UPoly& g);
UPoly square_free_part(const UPoly& f);
/// Yun decomposition: pairs (square-free primitive factor, multiplicity).
std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& f);

/// View a polynomial that only involves var as a UPoly.
UPoly to_upoly(const MPoly& p, std::size_t var);

}  // namespace toricred
