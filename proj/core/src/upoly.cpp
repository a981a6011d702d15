#include "toricred/upoly.hpp"

#include "toricred/errors.hpp"

namespace toricred {

UPoly::UPoly(std::vector<Rational> coeffs, std::string variable) : c_(std::move(coeffs)), var_(std::move(variable)) {
  trim();
}

UPoly UPoly::monomial(int degree, const Rational& c, std::string variable) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v), std::move(variable));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UPoly::leading_coefficient() const {
  if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly({}, var_);
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d), var_);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  Rational lc = leading_coefficient();
  for (auto& c : out.c_) c /= lc;
  return out;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer num = 0;
  Integer den = 1;
  for (const auto& c : c_) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_coefficient() < 0) scale = -scale;
  UPoly out = *this;
  for (auto& c : out.c_) c *= scale;
  return out;
}

int UPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

UPoly UPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return UPoly({}, var_);
  return UPoly(std::vector<Rational>(c_.begin() + k, c_.end()), var_);
}

UPoly UPoly::scale_argument(const Rational& s) const {
  UPoly out = *this;
  Rational p = 1;
  for (auto& c : out.c_) {
    c *= p;
    p *= s;
  }
  out.trim();
  return out;
}

UPoly UPoly::translate(const Rational& s) const {
  // Horner in the polynomial ring: p(t + s).
  UPoly acc({}, var_);
  UPoly lin({s, Rational(1)}, var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly({*it}, var_);
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly({}, a.var_);
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r), a.var_);
}

UPoly operator*(UPoly a, const Rational& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

UPoly UPoly::pow(unsigned k) const {
  UPoly r({Rational(1)}, var_);
  UPoly b = *this;
  while (k > 0) {
    if (k & 1U) r = r * b;
    k >>= 1U;
    if (k) b = b * b;
  }
  return r;
}

std::string UPoly::to_string() const {
  std::vector<std::string> vars{var_};
  return to_mpoly(vars, 0).to_string();
}

MPoly UPoly::to_mpoly(const std::vector<std::string>& variables, std::size_t var) const {
  MPoly p(variables);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Exponent e(variables.size(), 0);
    e[var] = static_cast<int>(k);
    p.add_term(e, c_[k]);
  }
  return p;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly({}, a.variable()), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational& lb = b.leading_coefficient();
  for (int k = da - db; k >= 0; --k) {
    Rational c = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q), a.variable()), UPoly(std::move(r), a.variable())};
}

UPoly polynomial_gcd(const UPoly& f, const UPoly& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  UPoly a = f.primitive();
  UPoly b = g.primitive();
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

UPoly square_free_part(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("square-free part of the zero polynomial");
  if (f.degree() == 0) return UPoly({Rational(1)}, f.variable());
  UPoly g = polynomial_gcd(f, f.derivative());
  return divmod(f, g).first.primitive();
}

std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("square-free decomposition of the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly a = polynomial_gcd(f, fp);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fp, a).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = polynomial_gcd(b, d);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    if (g.degree() > 0) out.emplace_back(g.primitive(), i);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UPoly to_upoly(const MPoly& p, std::size_t var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(var), -1) + 1), Rational(0));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) throw PreconditionError("polynomial is not univariate in '" + p.variables()[var] + "'");
    }
    c[static_cast<std::size_t>(e[var])] += v;
  }
  return UPoly(std::move(c), p.variables().empty() ? "t" : p.variables()[var]);
}

}  // namespace toricred
