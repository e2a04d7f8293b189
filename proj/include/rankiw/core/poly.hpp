#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rankiw/core/rational.hpp"

namespace rankiw {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so equality is
/// structural and the zero polynomial has an empty vector (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rational& a) { return UniPoly(std::vector<Rational>{a}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  static UniPoly monomial(int degree, const Rational& a = 1) {
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = a;
    return UniPoly(std::move(c));
  }
  static UniPoly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i < 0 || i > degree()) ? Rational(0) : c_[static_cast<size_t>(i)];
  }
  const Rational& leading() const {
    require_domain(!is_zero(), "leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !is_zero() && c_.back() == 1; }

  UniPoly monic() const {
    UniPoly r = *this;
    if (is_zero()) return r;
    Rational lc = c_.back();
    for (auto& a : r.c_) a /= lc;
    return r;
  }

  UniPoly derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Horner evaluation in any ring that accepts Rational scalars.
  template <class Ring>
  Ring eval_in(const Ring& x, const Ring& one) const {
    Ring acc = one * Rational(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + one * c_[i];
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (s == 0) return {};
    UniPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  // Euclidean division; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require_domain(!b.is_zero(), "polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lb = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Rational q = rem[static_cast<size_t>(k + b.degree())] / lb;
      quo[static_cast<size_t>(k)] = q;
      if (q == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }

  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  // Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
  static std::tuple<UniPoly, UniPoly, UniPoly> xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UniPoly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      UniPoly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational lc = r0.leading();
    Rational inv = 1 / lc;
    return {inv * r0, inv * s0, inv * t0};
  }

  UniPoly pow(unsigned e) const {
    UniPoly r = constant(1), b = *this;
    while (e) {
      if (e & 1U) r = r * b;
      b = b * b;
      e >>= 1U;
    }
    return r;
  }

  // Lexicographic on coefficient lists, lowest degree first.
  friend bool lex_less(const UniPoly& a, const UniPoly& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<size_t>(i)];
      if (a == 0) continue;
      bool neg = a < 0;
      Rational mag = neg ? Rational(-a) : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) {
        out += rankiw::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += rankiw::to_string(mag) + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Yun's algorithm. Returns monic squarefree a_i with f = lc * prod a_i^i.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  require_domain(!f.is_zero(), "squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly g = f.monic();
  if (g.degree() == 0) return out;
  UniPoly d = g.derivative();
  UniPoly a = UniPoly::gcd(g, d);
  UniPoly b = g / a;
  UniPoly c = d / a;
  UniPoly e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly h = UniPoly::gcd(b, e);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = b / h;
    c = e / h;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

inline UniPoly squarefree_part(const UniPoly& f) {
  UniPoly r = UniPoly::constant(1);
  for (const auto& [a, m] : squarefree_decomposition(f)) r = r * a;
  return r;
}

}  // namespace rankiw
