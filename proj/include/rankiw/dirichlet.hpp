#pragma once

#include <string>
#include <vector>

#include "rankiw/core/arith.hpp"
#include "rankiw/core/rational.hpp"

namespace rankiw {

/// A real Dirichlet character modulo a prime: trivial or quadratic.
struct DirichletCharacter {
  long modulus = 1;
  std::vector<int> values;  // values[a] for 0 <= a < modulus
  bool is_trivial = true;
  bool is_odd = false;

  int operator()(long a) const { return values[static_cast<size_t>(mod_long(a, modulus))]; }
  std::string name() const {
    return (is_trivial ? "trivial mod " : "quadratic mod ") + std::to_string(modulus);
  }
};

inline DirichletCharacter quadratic_character(long n) {
  require_domain(n > 2 && is_prime(n), "quadratic character needs an odd prime modulus");
  DirichletCharacter chi;
  chi.modulus = n;
  chi.values.resize(static_cast<size_t>(n));
  for (long a = 0; a < n; ++a) chi.values[static_cast<size_t>(a)] = legendre(a, n);
  chi.is_trivial = false;
  chi.is_odd = chi(n - 1) == -1;
  return chi;
}

inline DirichletCharacter trivial_character(long n) {
  require_domain(n >= 2 && is_prime(n), "trivial character needs a prime modulus");
  DirichletCharacter chi;
  chi.modulus = n;
  chi.values.assign(static_cast<size_t>(n), 1);
  chi.values[0] = 0;
  return chi;
}

// L(0, chi) = -B_{1,chi} = -(1/N) sum_{a=1}^{N-1} a chi(a).
inline Rational l_value_at_zero(const DirichletCharacter& chi) {
  if (chi.is_trivial || !chi.is_odd)
    throw DomainError("L(0, chi) is only provided for odd nontrivial characters");
  Integer s = 0;
  for (long a = 1; a < chi.modulus; ++a) s += Integer(a) * chi(a);
  return make_rational(-s, Integer(chi.modulus));
}

/// g(chi) held symbolically as i*sqrt(radicand) (or sqrt(radicand) when even).
struct SymbolicGaussSum {
  long radicand = 0;
  bool imaginary = false;

  std::string to_string() const {
    return std::string(imaginary ? "i*" : "") + "sqrt(" + std::to_string(radicand) + ")";
  }
};

inline SymbolicGaussSum gauss_sum(const DirichletCharacter& chi) {
  if (chi.is_trivial || !chi.is_odd || chi.modulus % 4 != 3)
    throw UnsupportedError("Gauss sum is only provided for the odd quadratic character mod N = 3 (mod 4)");
  return {chi.modulus, true};
}

/// The exact number value / sqrt(radicand).
struct RationalOverSqrt {
  Rational value;
  long radicand = 1;

  std::string to_string() const { return rankiw::to_string(value) + "/sqrt(" + std::to_string(radicand) + ")"; }
};

// x / (g(chi)/i): cancels the i symbolically and keeps sqrt(N) as a tag.
inline RationalOverSqrt divide_by_gauss_over_i(const Rational& x, const SymbolicGaussSum& g) {
  require_domain(g.imaginary, "expected an imaginary Gauss sum");
  return {x, g.radicand};
}

}  // namespace rankiw
