#include "toricred/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "toricred/errors.hpp"

namespace toricred {

namespace {

using ZPoly = std::vector<Integer>;   // ascending, trimmed
using FpPoly = std::vector<std::uint64_t>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }
int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// --- arithmetic in F_p[x], p < 2^31 ---

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

FpPoly fp_add(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.empty()) throw PreconditionError("modular division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  const std::uint64_t inv = inv_mod(b.back(), p);
  FpPoly q(a.size() - b.size() + 1, 0);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    std::uint64_t c = a[static_cast<std::size_t>(k) + b.size() - 1] * inv % p;
    q[static_cast<std::size_t>(k)] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = a[static_cast<std::size_t>(k) + j];
      slot = (slot + p - c * b[j] % p) % p;
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, std::uint64_t p) { return fp_divmod(a, b, p).second; }

FpPoly fp_monic(FpPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// Extended Euclid: returns (s, t) with s a + t b = 1 for coprime a, b.
std::pair<FpPoly, FpPoly> fp_ext_gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{};
  FpPoly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw PreconditionError("extended gcd of non-coprime modular polynomials");
  std::uint64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

FpPoly fp_powmod(FpPoly base, const Integer& e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1};
  base = fp_mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mod(fp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mod(fp_mul(result, base, p), m, p);
  }
  return result;
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = a[k] * (k % p) % p;
  trim(d);
  return d;
}

FpPoly reduce(const ZPoly& a, std::uint64_t p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim(r);
  return r;
}

// Distinct-degree factorization of a monic square-free f.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, std::uint64_t p) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly x{0, 1};
  FpPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = fp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_divmod(f, g, p).first;
      h = fp_mod(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p).
void equal_degree(const FpPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (deg(g) == d) {
    out.push_back(fp_monic(g, p));
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    FpPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    FpPoly b = fp_sub(fp_powmod(a, e, g, p), FpPoly{1}, p);
    FpPoly h = fp_gcd(g, b, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(fp_divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// --- integer polynomial helpers ---

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void zmod(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  trim(a);
}

void zsymmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
}

ZPoly lift_fp(const FpPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  const Integer& lb = b.back();
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k) + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer c = top / lb;
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

ZPoly zprimitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Lift f = g h (mod p) with g monic to (mod p^k), f given exactly modulo modulus.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, std::uint64_t p,
                                    int k, const Integer& modulus) {
  auto [s, t] = fp_ext_gcd(g0, h0, p);
  ZPoly g = lift_fp(g0);
  ZPoly h = lift_fp(h0);
  Integer m = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    ZPoly e = f;
    ZPoly gh = zmul(g, h);
    if (gh.size() > e.size()) e.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    zmod(e, modulus);
    for (auto& c : e) c /= m;  // exact: f == gh mod m
    FpPoly ep = reduce(e, p);
    auto [q, G] = fp_divmod(fp_mul(t, ep, p), g0, p);
    FpPoly H = fp_add(fp_mul(s, ep, p), fp_mul(q, h0, p), p);
    ZPoly Gz = lift_fp(G);
    ZPoly Hz = lift_fp(H);
    if (Gz.size() > g.size()) g.resize(Gz.size(), Integer(0));
    for (std::size_t i = 0; i < Gz.size(); ++i) g[i] += m * Gz[i];
    if (Hz.size() > h.size()) h.resize(Hz.size(), Integer(0));
    for (std::size_t i = 0; i < Hz.size(); ++i) h[i] += m * Hz[i];
    m *= static_cast<unsigned long>(p);
    zmod(g, m);
    zmod(h, m);
  }
  return {g, h};
}

// Lift all monic modular factors of f (lc(f) attached to the cofactor).
std::vector<ZPoly> multi_lift(const ZPoly& f, std::vector<FpPoly> factors, std::uint64_t p, int k,
                              const Integer& modulus) {
  std::vector<ZPoly> lifted;
  ZPoly current = f;
  zmod(current, modulus);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    FpPoly rest = reduce(ZPoly{current.back()}, p);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = fp_mul(rest, factors[j], p);
    auto [g, h] = hensel_lift(current, factors[i], rest, p, k, modulus);
    lifted.push_back(std::move(g));
    current = std::move(h);
  }
  // Last factor: current / lc modulo p^k, made monic.
  Integer lc = current.back();
  Integer inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : current) c *= inv;
  zmod(current, modulus);
  lifted.push_back(std::move(current));
  return lifted;
}

bool is_square_free_mod(const ZPoly& f, std::uint64_t p) {
  FpPoly fp = reduce(f, p);
  if (deg(fp) != deg(f)) return false;
  FpPoly g = fp_gcd(fp, fp_derivative(fp, p), p);
  return deg(g) == 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Factor a primitive square-free integer polynomial of degree >= 2.
std::vector<ZPoly> factor_square_free(const ZPoly& f) {
  if (deg(f) <= 1) return {f};
  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<FpPoly, int>> best_ddf;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (!is_square_free_mod(f, p)) continue;
    ++tried;
    auto ddf = distinct_degree(fp_monic(reduce(f, p), p), p);
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += static_cast<std::size_t>(deg(g) / d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
      best_ddf = std::move(ddf);
    }
    if (count == 1) break;
  }
  if (best_p == 0) throw NumericError("no suitable prime for modular factorization");
  if (best_count == 1) return {f};

  const std::uint64_t p = best_p;
  std::mt19937_64 rng(0x5eed5eedULL + p);
  std::vector<FpPoly> modular;
  for (const auto& [g, d] : best_ddf) equal_degree(g, d, p, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Landau-Mignotte style bound on factor coefficients.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(deg(f) + 1));
  int k = 1;
  Integer modulus = static_cast<unsigned long>(p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }

  std::vector<ZPoly> lifted = multi_lift(f, modular, p, k, modulus);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{rest.back()};
      for (std::size_t i : idx) {
        cand = zmul(cand, lifted[i]);
        zsymmetric(cand, modulus);
      }
      cand = zprimitive(cand);
      if (auto q = zdivide(rest, cand)) {
        result.push_back(cand);
        rest = *q;
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0; i < r; ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
        }
        lifted = std::move(remaining);
        found = true;
        break;
      }
      // next combination
      std::size_t pos = subset_size;
      while (pos > 0 && idx[pos - 1] == r - subset_size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (deg(rest) > 0) result.push_back(zprimitive(rest));
  return result;
}

ZPoly to_zpoly(const UPoly& f) {
  UPoly prim = f.primitive();
  ZPoly z;
  for (const auto& c : prim.coeffs()) z.push_back(c.get_num());
  return z;
}

UPoly from_zpoly(const ZPoly& z, const std::string& var) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return UPoly(std::move(c), var);
}

}  // namespace

UPoly FactorList::expand(const std::string& variable) const {
  UPoly r({unit}, variable);
  for (const auto& [g, m] : factors) r = r * g.pow(static_cast<unsigned>(m));
  return r;
}

FactorList factor_over_rationals(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  FactorList out;
  const std::string& var = f.variable();
  for (const auto& [g, mult] : square_free_decomposition(f)) {
    for (const ZPoly& z : factor_square_free(to_zpoly(g))) out.factors.emplace_back(from_zpoly(z, var), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.second != b.second) return a.second < b.second;
    return a.first.coeffs() < b.first.coeffs();
  });
  Rational lc = 1;
  for (const auto& [g, m] : out.factors) {
    for (int i = 0; i < m; ++i) lc *= g.leading_coefficient();
  }
  out.unit = f.leading_coefficient() / lc;
  return out;
}

std::vector<RationalRoot> rational_roots(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  for (const auto& [g, m] : factor_over_rationals(f).factors) {
    if (g.degree() != 1) continue;
    Rational r = -g.coeffs()[0] / g.coeffs()[1];
    if (f.evaluate(r) != 0) throw NumericError("linear factor failed exact verification");
    roots.push_back({r, m});
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return roots;
}

}  // namespace toricred
