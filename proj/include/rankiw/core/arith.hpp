#pragma once

#include <vector>

#include "rankiw/core/errors.hpp"

namespace rankiw {

inline bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    out.push_back(p);
    for (long m = p * p; m <= bound; m += p) composite[static_cast<size_t>(m)] = true;
  }
  return out;
}

inline long next_prime(long n) {
  long p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

inline std::vector<long> divisors(long n) {
  require_domain(n >= 1, "divisors of a non-positive integer");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline long sigma1(long n) {
  long s = 0;
  for (long d : divisors(n)) s += d;
  return s;
}

// Prime-power factorization as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<long, int>> factor_integer(long n) {
  require_domain(n >= 1, "factorization of a non-positive integer");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long powmod_long(long b, long e, long m) {
  long r = 1 % m;
  b = mod_long(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<long>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

inline long inverse_mod_long(long a, long m) {
  long r0 = m, r1 = mod_long(a, m), s0 = 0, s1 = 1;
  while (r1) {
    long q = r0 / r1;
    long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  require_domain(r0 == 1, "element is not invertible modulo m");
  return mod_long(s0, m);
}

// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
inline int legendre(long a, long p) {
  long r = mod_long(a, p);
  if (r == 0) return 0;
  return powmod_long(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace rankiw
