#pragma once

#include <array>
#include <cstdlib>
#include <vector>

#include "rankiw/core/arith.hpp"

namespace rankiw {

// Entries (a, b, c, d) of [[a, b], [c, d]].
using IntMatrix2 = std::array<long, 4>;

// Cremona's Heilbronn matrices of determinant p, for odd prime p.
inline std::vector<IntMatrix2> heilbronn_cremona(long p) {
  require_domain(p > 2 && is_prime(p), "Cremona's Heilbronn list needs an odd prime");
  std::vector<IntMatrix2> out{{1, 0, 0, p}};
  for (long r = -(p / 2); r <= p / 2; ++r) {
    long x1 = p, x2 = -r, y1 = 0, y2 = 1, a = -p, b = r;
    out.push_back({x1, x2, y1, y2});
    while (b != 0) {
      // a/b rounded to nearest, halves away from zero
      long q = (2 * std::labs(a) + std::labs(b)) / (2 * std::labs(b));
      if ((a < 0) != (b < 0)) q = -q;
      long c = a - b * q;
      a = -b;
      b = c;
      long x3 = q * x2 - x1;
      x1 = x2;
      x2 = x3;
      long y3 = q * y2 - y1;
      y1 = y2;
      y2 = y3;
      out.push_back({x1, x2, y1, y2});
    }
  }
  return out;
}

// Merel's set: ad - bc = n, a > b >= 0, d > c >= 0.
inline std::vector<IntMatrix2> heilbronn_merel(long n) {
  require_domain(n >= 1, "Merel's set needs a positive determinant");
  std::vector<IntMatrix2> out;
  for (long a = 1; a <= n; ++a)
    for (long d = 1; d <= n; ++d) {
      long bc = a * d - n;
      if (bc < 0) continue;
      for (long b = 0; b < a; ++b) {
        if (b == 0) {
          if (bc != 0) continue;
          for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
          continue;
        }
        if (bc % b) continue;
        long c = bc / b;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  return out;
}

// The list used for T_p.
inline std::vector<IntMatrix2> hecke_matrices(long p) {
  require_domain(is_prime(p), "Hecke operators are built for prime index");
  if (p == 2) return {{1, 0, 0, 2}, {2, 0, 0, 1}, {2, 1, 0, 1}, {1, 0, 1, 2}};
  return heilbronn_cremona(p);
}

}  // namespace rankiw
