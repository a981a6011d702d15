#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricred/rational.hpp"

namespace toricred {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named variables. Terms are kept in descending
/// lexicographic order of exponent vectors; zero coefficients are never
/// stored, so structural equality is polynomial equality.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> variables);

  static MPoly constant(std::vector<std::string> variables, const Rational& c);
  static MPoly variable(std::vector<std::string> variables, std::size_t index);
  static MPoly monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  std::size_t index_of(std::string_view name) const;

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Exponent& e, const Rational& c);

  int degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  int total_degree() const;
  bool depends_on(std::size_t var) const { return degree(var) > 0; }
  bool is_homogeneous_in(std::span<const std::size_t> vars) const;

  Rational coefficient(const Exponent& e) const;
  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;

  /// Coefficient of var^k, returned over the same variables with var absent.
  MPoly coefficient_in(std::size_t var, int k) const;

  MPoly evaluate(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Re-express over another variable list, matching variables by name.
  MPoly with_variables(const std::vector<std::string>& variables) const;

  /// Positive rational c such that f / c has coprime integer coefficients.
  Rational content() const;
  MPoly primitive_part() const;

  /// Largest monomial dividing every term, as an exponent vector.
  Exponent monomial_gcd() const;
  MPoly divide_by_monomial(const Exponent& e) const;
  /// Divide out the largest monomial in the first `count` variables.
  MPoly strip_monomial(std::size_t count) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly pow(unsigned k) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check_compatible(const MPoly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Exact quotient a / b; nullopt when b does not divide a.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);
MPoly divide_exact(const MPoly& a, const MPoly& b);

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
MPoly determinant(std::vector<std::vector<MPoly>> matrix, const std::vector<std::string>& variables);

/// Determinant of the Sylvester matrix of f and g in var, rows of f first.
/// When exactly one input is constant in var the result is the usual power.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, std::size_t var);
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, std::string_view var);

}  // namespace toricred
