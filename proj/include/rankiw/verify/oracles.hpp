#pragma once

#include <array>
#include <numeric>

#include "rankiw/core/arith.hpp"

// Brute-force oracles, independent of the main pipeline.
namespace rankiw::oracle {

// h(D) for D < 0 by counting reduced primitive forms (a, b, c), b^2 - 4ac = D.
inline long class_number(long disc) {
  require_domain(disc < 0 && (mod_long(disc, 4) == 0 || mod_long(disc, 4) == 1), "not a negative discriminant");
  long h = 0;
  for (long a = 1; 3 * a * a <= -disc; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - disc;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

// Number of units of the imaginary quadratic order of discriminant D.
inline long unit_count(long disc) { return disc == -3 ? 6 : (disc == -4 ? 4 : 2); }

// Genus of X_0(p) for prime p.
inline long genus_x0(long p) {
  require_domain(is_prime(p), "genus oracle needs a prime level");
  if (p < 5) return 0;
  long nu2 = 1 + legendre(-1, p);
  long nu3 = 1 + legendre(-3, p);
  // g = 1 + (p+1)/12 - nu2/4 - nu3/3 - 2/2
  long twelve_g = (p + 1) - 3 * nu2 - 4 * nu3;
  require_internal(twelve_g % 12 == 0, "genus formula is not integral");
  return twelve_g / 12;
}

using Weierstrass = std::array<long, 5>;  // [a1, a2, a3, a4, a6]

inline const Weierstrass kCurve11a1{0, -1, 1, -10, -20};
inline const Weierstrass kCurve67a1{0, 1, 1, -12, -21};

// #E(F_p) by direct enumeration, point at infinity included.
inline long count_points(const Weierstrass& e, long p) {
  long n = 1;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long lhs = mod_long(y * y + e[0] * x * y + e[2] * y, p);
      long rhs = mod_long(mod_long(x * x % p * x, p) + e[1] * x % p * x + e[3] * x + e[4], p);
      if (lhs == rhs) ++n;
    }
  return n;
}

inline long trace_of_frobenius(const Weierstrass& e, long p) { return p + 1 - count_points(e, p); }

}  // namespace rankiw::oracle
