#pragma once

// Factorization of univariate polynomials over Q (Zassenhaus).
//
// squarefree decomposition -> factor mod a small prime of good reduction
// (distinct-degree + Cantor-Zassenhaus) -> linear Hensel lifting ->
// subset recombination with exact trial division over Z.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "rankiw/core/poly.hpp"

namespace rankiw {

namespace detail {

using ModPoly = std::vector<std::int64_t>;  // lowest degree first, trimmed

inline std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = mod_p(a, p), r1 = p, s0 = 1, s1 = 0;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  require_internal(r0 == 1, "inverse mod p of non-unit");
  return mod_p(s0, p);
}

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ModPoly sub(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod_p(r[i] - b[i], p);
  trim(r);
  return r;
}

inline ModPoly add(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  require_internal(!b.empty(), "mod-p division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly rem = a;
  ModPoly quo(static_cast<size_t>(deg(a) - deg(b)) + 1, 0);
  std::int64_t inv_lc = inv_mod(b.back(), p);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    std::int64_t q = rem[static_cast<size_t>(k + deg(b))] * inv_lc % p;
    quo[static_cast<size_t>(k)] = q;
    if (!q) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = rem[static_cast<size_t>(k + j)];
      slot = mod_p(slot - q * b[static_cast<size_t>(j)], p);
    }
  }
  trim(rem);
  trim(quo);
  return {quo, rem};
}

inline ModPoly make_monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t inv = inv_mod(a.back(), p);
  for (auto& v : a) v = v * inv % p;
  return a;
}

inline ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// s, t with s*a + t*b = 1 (a, b coprime).
inline std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  require_internal(deg(r0) == 0, "Hensel factors not coprime mod p");
  std::int64_t inv = inv_mod(r0[0], p);
  for (auto& v : s0) v = v * inv % p;
  for (auto& v : t0) v = v * inv % p;
  return {s0, t0};
}

inline ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m, std::int64_t p) {
  ModPoly result{1};
  base = divmod(base, m, p).second;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, base, p), m, p).second;
  }
  return result;
}

inline ModPoly derivative(const ModPoly& a, std::int64_t p) {
  ModPoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i) % p);
  trim(d);
  return d;
}

// Distinct-degree factorization of a monic squarefree f: (product, degree) pairs.
inline std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, std::int64_t p) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, Integer(p), f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree(const ModPoly& f, int d, std::int64_t p, std::mt19937_64& rng,
                         std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e = (pow(Integer(p), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<size_t>(deg(f)), 0);
    for (auto& v : a) v = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod(a, e, f, p), ModPoly{1}, p);
    ModPoly g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<ModPoly> factor_mod_p(const ModPoly& f, std::int64_t p) {
  std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(p));
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

using ZPoly = std::vector<Integer>;  // lowest degree first

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly reduce(const ZPoly& a, std::int64_t p) {
  ModPoly r;
  Integer pp(static_cast<long>(p));
  for (const auto& v : a) r.push_back(mod(v, pp).get_si());
  trim(r);
  return r;
}

inline ZPoly lift(const ModPoly& a) {
  ZPoly r;
  for (auto v : a) r.emplace_back(static_cast<long>(v));
  return r;
}

inline ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = mod(v, m);
  trim(r);
  return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly zadd_scaled(const ZPoly& a, const ModPoly& b, const Integer& scale) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += scale * static_cast<long>(b[i]);
  trim(r);
  return r;
}

// Lift target = g*h (mod p), g and h monic and coprime mod p, to modulus p^k.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& target, const ModPoly& g0, const ModPoly& h0,
                                           std::int64_t p, int k) {
  auto [s, t] = bezout(g0, h0, p);
  ZPoly g = lift(g0), h = lift(h0);
  Integer m(static_cast<long>(p));
  Integer pz(static_cast<long>(p));
  for (int j = 1; j < k; ++j) {
    Integer next = m * pz;
    ZPoly e = zsub(target, zmul_mod(g, h, next));
    for (auto& v : e) v = mod(v, next) / m;
    ModPoly eh = reduce(e, p);
    if (!eh.empty()) {
      auto [q, r] = divmod(mul(t, eh, p), g0, p);
      ModPoly dh = add(mul(s, eh, p), mul(q, h0, p), p);
      g = zadd_scaled(g, r, m);
      h = zadd_scaled(h, dh, m);
    }
    m = next;
  }
  return {g, h};
}

inline ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& v : a) {
    v = mod(v, m);
    if (v > half) v -= m;
  }
  trim(a);
  return a;
}

inline Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& v : a) g = rankiw::gcd(g, v);
  return g;
}

inline ZPoly primitive(ZPoly a) {
  Integer c = content(a);
  if (c == 0) return a;
  if (a.back() < 0) c = -c;
  for (auto& v : a) v /= c;
  return a;
}

inline UniPoly to_unipoly(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& v : a) c.emplace_back(v);
  return UniPoly(std::move(c));
}

// Primitive integer polynomial with positive leading coefficient, same roots as f.
inline ZPoly to_primitive_zpoly(const UniPoly& f) {
  Integer den = 1;
  for (const auto& a : f.coeffs()) den = rankiw::lcm(den, a.get_den());
  ZPoly z;
  for (const auto& a : f.coeffs()) z.push_back(a.get_num() * (den / a.get_den()));
  return primitive(z);
}

// Exact division test over Z; returns quotient when b | a.
inline std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  ZPoly quo(a.size() - b.size() + 1, Integer(0));
  for (size_t k = quo.size(); k-- > 0;) {
    const Integer& top = rem[k + b.size() - 1];
    if (!divides(b.back(), top)) {
      if (top != 0) return std::nullopt;
      continue;
    }
    Integer q = top / b.back();
    quo[k] = q;
    for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  trim(quo);
  return quo;
}

// Irreducible factors of a squarefree primitive integer polynomial of degree >= 2.
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Integer lc = f.back();
  // Pick the prime (among the first few suitable ones) giving the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (std::int64_t p = 3; tried < 6 && p < 10000; p += 2) {
    bool is_prime = true;
    for (std::int64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) { is_prime = false; break; }
    if (!is_prime || divides(Integer(static_cast<long>(p)), lc)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(fp) != n || deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    ++tried;
    auto facs = factor_mod_p(make_monic(fp, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  require_internal(best_p != 0, "no prime of good reduction found");
  if (best.size() == 1) return {f};

  // Mignotte-style bound on factor coefficients, times |lc|.
  Integer norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * abs(lc) * pow(Integer(2), static_cast<unsigned long>(n)) * norm + 1;
  int k = 1;
  Integer modulus(static_cast<long>(best_p));
  while (modulus <= bound) {
    modulus *= best_p;
    ++k;
  }

  // f / lc as a monic polynomial mod p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly target;
  for (const auto& v : f) target.push_back(mod(v * lc_inv, modulus));

  std::vector<ZPoly> lifted;
  for (size_t i = 0; i + 1 < best.size(); ++i) {
    ModPoly rest{1};
    for (size_t j = i + 1; j < best.size(); ++j) rest = mul(rest, best[j], best_p);
    auto [g, h] = hensel_pair(target, best[i], rest, best_p, k);
    for (auto& v : g) v = mod(v, modulus);
    for (auto& v : h) v = mod(v, modulus);
    lifted.push_back(std::move(g));
    target = std::move(h);
  }
  lifted.push_back(target);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{rest.back()};
      for (size_t i : idx) cand = zmul_mod(cand, lifted[i], modulus);
      cand = primitive(symmetric(cand, modulus));
      bool const_ok = !cand.empty() && (cand[0] == 0 ? rest[0] == 0 : divides(cand[0], rest[0]));
      if (const_ok) {
        if (auto q = exact_divide(rest, cand)) {
          result.push_back(cand);
          rest = primitive(*q);
          for (size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
          found = true;
          break;
        }
      }
      // next combination
      size_t pos = s;
      while (pos-- > 0) {
        if (idx[pos] != pos + lifted.size() - s) break;
      }
      if (pos == static_cast<size_t>(-1)) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

}  // namespace detail

struct FactorPower {
  UniPoly factor;  // monic, irreducible over Q
  int multiplicity;
};

struct Factorization {
  Rational unit;
  std::vector<FactorPower> factors;

  UniPoly expand() const {
    UniPoly r = UniPoly::constant(unit);
    for (const auto& fp : factors) r = r * fp.factor.pow(static_cast<unsigned>(fp.multiplicity));
    return r;
  }
};

inline bool factor_order(const FactorPower& a, const FactorPower& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  if (a.factor != b.factor) return lex_less(a.factor, b.factor);
  return a.multiplicity < b.multiplicity;
}

inline Factorization factor_poly(const UniPoly& f) {
  require_domain(!f.is_zero(), "cannot factor the zero polynomial");
  Factorization out{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (part.degree() == 1) {
      out.factors.push_back({part, mult});
      continue;
    }
    for (const auto& z : detail::factor_squarefree_z(detail::to_primitive_zpoly(part))) {
      out.factors.push_back({detail::to_unipoly(z).monic(), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_order);
  return out;
}

inline bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_poly(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace rankiw
