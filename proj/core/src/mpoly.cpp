#include "toricred/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toricred/errors.hpp"

namespace toricred {

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MPoly MPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MPoly p(std::move(variables));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MPoly p(std::move(variables));
  if (index >= p.vars_.size()) throw PreconditionError("variable index out of range");
  Exponent e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
  MPoly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

std::size_t MPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size()) throw PreconditionError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::is_homogeneous_in(std::span<const std::size_t> vars) const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t v : vars) s += e[v];
    if (deg && *deg != s) return false;
    deg = s;
  }
  return true;
}

Rational MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& MPoly::leading_exponent() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

MPoly MPoly::coefficient_in(std::size_t var, int k) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::evaluate(std::size_t var, const Rational& value) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(e[var]));
    mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(e[var]));
    out.add_term(f, c * p);
  }
  return out;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw PreconditionError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::with_variables(const std::vector<std::string>& variables) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it == variables.end()) {
      if (degree(i) > 0) throw PreconditionError("variable '" + vars_[i] + "' missing from target list");
      map[i] = variables.size();
    } else {
      map[i] = static_cast<std::size_t>(it - variables.begin());
    }
  }
  MPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponent f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (map[i] < variables.size()) f[map[i]] += e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Rational MPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num = 0;
  Integer den = 1;
  for (const auto& [e, c] : terms_) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  MPoly out = *this;
  Rational c = content();
  for (auto& [e, v] : out.terms_) v /= c;
  return out;
}

Exponent MPoly::monomial_gcd() const {
  Exponent g(vars_.size(), 0);
  if (terms_.empty()) return g;
  g = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
  }
  return g;
}

MPoly MPoly::divide_by_monomial(const Exponent& m) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] -= m[i];
      if (f[i] < 0) throw PreconditionError("monomial does not divide polynomial");
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::strip_monomial(std::size_t count) const {
  if (is_zero()) return *this;
  Exponent g = monomial_gcd();
  for (std::size_t i = count; i < g.size(); ++i) g[i] = 0;
  return divide_by_monomial(g);
}

void MPoly::check_compatible(const MPoly& other) const {
  if (vars_ != other.vars_) throw PreconditionError("polynomials over different variable lists");
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (vars_.empty() && terms_.empty()) vars_ = other.vars_;
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (vars_.empty() && terms_.empty()) vars_ = other.vars_;
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponent e(a.vars_.size());
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(vars_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    std::string mono = monomial_text(vars_, e);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += toricred::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += toricred::to_string(mag) + '*' + mono;
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  MPoly parse() {
    MPoly result(vars_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      MPoly t = term();
      result += sgn > 0 ? t : -t;
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  MPoly term() {
    Rational coeff = 1;
    Exponent e(vars_.size(), 0);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        std::string name = identifier();
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
        int k = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          k = small_integer();
        }
        e[static_cast<std::size_t>(it - vars_.begin())] += k;
      } else if (have_factor && (c == '+' || c == '-')) {
        break;
      } else if (c == '*' && have_factor) {
        ++pos_;
        skip_ws();
        if (at_end()) throw ParseError("dangling '*'", pos_);
        continue;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      have_factor = true;
    }
    if (!have_factor) throw ParseError("expected a term", pos_);
    return MPoly::monomial(vars_, e, coeff);
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) throw ParseError("expected denominator", pos_);
      den = std::string(text_.substr(ds, pos_ - ds));
      if (Integer(den) == 0) throw ParseError("zero denominator", ds);
    }
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
  }

  int small_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).parse();
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  MPoly q(a.variables());
  if (a.is_zero()) return q;
  MPoly r = a;
  const Exponent& lb = b.leading_exponent();
  const Rational& cb = b.leading_coefficient();
  Exponent shift(lb.size());
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    for (std::size_t i = 0; i < lr.size(); ++i) {
      shift[i] = lr[i] - lb[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Rational c = r.leading_coefficient() / cb;
    MPoly t = MPoly::monomial(a.variables(), shift, c);
    q += t;
    r -= t * b;
  }
  return q;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw PreconditionError("inexact polynomial division");
  return *q;
}

MPoly determinant(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& variables) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(variables, 1);
  for (const auto& row : m) {
    if (row.size() != n) throw PreconditionError("determinant of non-square matrix");
  }
  int sgn = 1;
  MPoly prev = MPoly::constant(variables, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MPoly(variables);
      std::swap(m[k], m[piv]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly v = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(v) : divide_exact(v, prev);
      }
      m[i][k] = MPoly(variables);
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sgn > 0 ? det : -det;
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, std::size_t var) {
  if (f.variables() != g.variables()) throw PreconditionError("resultant of polynomials over different variables");
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant with the zero polynomial");
  const int m = f.degree(var);
  const int n = g.degree(var);
  if (m == 0 && n == 0) {
    throw PreconditionError("both polynomials are constant in '" + f.variables()[var] + "'");
  }
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));
  const auto& vars = f.variables();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<MPoly> fc(static_cast<std::size_t>(m) + 1);
  std::vector<MPoly> gc(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= m; ++k) fc[static_cast<std::size_t>(k)] = f.coefficient_in(var, k);
  for (int k = 0; k <= n; ++k) gc[static_cast<std::size_t>(k)] = g.coefficient_in(var, k);
  std::vector<std::vector<MPoly>> mat(size, std::vector<MPoly>(size, MPoly(vars)));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = fc[static_cast<std::size_t>(k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = gc[static_cast<std::size_t>(k)];
  }
  return determinant(std::move(mat), vars);
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, std::string_view var) {
  return sylvester_resultant(f, g, f.index_of(var));
}

}  // namespace toricred
