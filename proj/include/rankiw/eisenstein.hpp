#pragma once

#include <vector>

#include "rankiw/core/qseries.hpp"
#include "rankiw/dirichlet.hpp"

namespace rankiw {

struct EisensteinSeries {
  long level = 0;
  int weight = 0;
  DirichletCharacter nebentypus;
  RationalSeries expansion;
};

// G_{1,chi}: a_0 = L(0,chi)/2, a_n = sum_{d|n} chi(d).
inline EisensteinSeries weight1_eisenstein(const DirichletCharacter& chi, int prec) {
  require_domain(prec >= 2, "precision must be at least 2");
  if (chi.is_trivial || !chi.is_odd)
    throw DomainError("weight-1 Eisenstein series needs an odd quadratic character");
  std::vector<Rational> a;
  a.reserve(static_cast<size_t>(prec));
  a.push_back(l_value_at_zero(chi) / 2);
  for (long n = 1; n < prec; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += chi(d);
    a.emplace_back(s);
  }
  return {chi.modulus, 1, chi, RationalSeries(std::move(a))};
}

// Weight 2, prime level: a_0 = (N-1)/24, a_n = sigma(n) - N sigma(n/N).
inline EisensteinSeries weight2_eisenstein(long n, int prec) {
  require_domain(is_prime(n), "weight-2 Eisenstein series needs a prime level");
  require_domain(prec >= 2, "precision must be at least 2");
  std::vector<Rational> a;
  a.reserve(static_cast<size_t>(prec));
  a.push_back(make_rational(n - 1, 24));
  for (long m = 1; m < prec; ++m) {
    long s = sigma1(m);
    if (m % n == 0) s -= n * sigma1(m / n);
    a.emplace_back(s);
  }
  return {n, 2, trivial_character(n), RationalSeries(std::move(a))};
}

}  // namespace rankiw
