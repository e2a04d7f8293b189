#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rankiw/core/errors.hpp"

namespace rankiw {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  require_domain(den != 0, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Exponent of prime p in n; n must be nonzero.
inline int valuation(Integer n, const Integer& p) {
  require_domain(n != 0, "valuation of zero");
  int v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

inline Integer odd_part(Integer n) {
  require_domain(n != 0, "odd part of zero");
  n = abs(n);
  while (mpz_even_p(n.get_mpz_t())) n /= 2;
  return n;
}

inline bool divides(const Integer& d, const Integer& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Non-negative remainder.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

enum class RoundDir { down, up };

// Fixed-point decimal string of q, rounded in the given direction.
inline std::string to_decimal(const Rational& q, int digits, RoundDir dir) {
  Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
  Integer scaled_num = q.get_num() * scale;
  Integer v = dir == RoundDir::down ? floor_div(scaled_num, q.get_den())
                                    : ceil_div(scaled_num, q.get_den());
  bool neg = v < 0;
  std::string s = abs(v).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return neg ? "-" + s : s;
}

}  // namespace rankiw
