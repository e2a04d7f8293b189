#pragma once

#include <utility>
#include <vector>

#include "rankiw/core/arith.hpp"

namespace rankiw {

/// P^1(Z/N) for prime N. Index t < N is (1:t); index N is (0:1).
class P1List {
 public:
  explicit P1List(long n) : n_(n), inv_(static_cast<size_t>(n), 0) {
    require_domain(is_prime(n), "P^1(Z/N) is implemented for prime N only");
    for (long a = 1; a < n; ++a) inv_[static_cast<size_t>(a)] = inverse_mod_long(a, n);
  }

  long modulus() const { return n_; }
  size_t size() const { return static_cast<size_t>(n_) + 1; }

  size_t index(long c, long d) const {
    c = mod_long(c, n_);
    d = mod_long(d, n_);
    if (c == 0) {
      require_domain(d != 0, "(0:0) is not a point of P^1");
      return static_cast<size_t>(n_);
    }
    return static_cast<size_t>((d * inv_[static_cast<size_t>(c)]) % n_);
  }

  std::pair<long, long> element(size_t i) const {
    if (i == static_cast<size_t>(n_)) return {0, 1};
    return {1, static_cast<long>(i)};
  }

  // (c:d)S = (d:-c)
  size_t apply_s(size_t i) const {
    auto [c, d] = element(i);
    return index(d, -c);
  }
  // (c:d)T = (d:-c-d)
  size_t apply_t(size_t i) const {
    auto [c, d] = element(i);
    return index(d, -c - d);
  }
  // (c:d)T^2 = (-c-d:c)
  size_t apply_t2(size_t i) const {
    auto [c, d] = element(i);
    return index(-c - d, c);
  }
  // (c:d)* = (-c:d)
  size_t apply_star(size_t i) const {
    auto [c, d] = element(i);
    return index(-c, d);
  }

 private:
  long n_;
  std::vector<long> inv_;
};

}  // namespace rankiw
