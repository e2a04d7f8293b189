#pragma once

#include <vector>

#include "rankiw/core/poly.hpp"

namespace rankiw {

/// Sturm chain of the squarefree part of f; counts distinct real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& f) {
    require_domain(!f.is_zero(), "Sturm chain of the zero polynomial");
    UniPoly g = squarefree_part(f);
    if (g.degree() <= 0) g = UniPoly::constant(1);
    chain_.push_back(g);
    if (g.degree() > 0) chain_.push_back(g.derivative());
    while (chain_.back().degree() > 0) {
      UniPoly r = chain_[chain_.size() - 2] % chain_.back();
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  // Sign changes at a rational point (zeros skipped).
  int variations_at(const Rational& x) const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back(sgn(p.eval(x)));
    return count(s);
  }
  int variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back(sgn(p.leading()));
    return count(s);
  }
  int variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back((p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading()));
    return count(s);
  }

  // Distinct real roots in (a, b].
  int count_in(const Rational& a, const Rational& b) const {
    require_domain(a < b, "Sturm interval must satisfy a < b");
    return variations_at(a) - variations_at(b);
  }
  int count_above(const Rational& a) const { return variations_at(a) - variations_at_pos_inf(); }
  int count_at_most(const Rational& a) const { return variations_at_neg_inf() - variations_at(a); }
  int count_real() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  static int count(const std::vector<int>& s) {
    int v = 0, prev = 0;
    for (int x : s) {
      if (x == 0) continue;
      if (prev != 0 && x != prev) ++v;
      prev = x;
    }
    return v;
  }
  static int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

  std::vector<UniPoly> chain_;
};

// Strictly negative real roots of f (counted without multiplicity).
inline int count_negative_roots(const UniPoly& f) {
  SturmChain s(f);
  return s.count_at_most(Rational(0)) - (f.eval(Rational(0)) == 0 ? 1 : 0);
}

}  // namespace rankiw
