#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "rankiw/core/rational.hpp"
#include "rankiw/core/realroots.hpp"

namespace rankiw {

inline constexpr mpfr_prec_t kCertifiedBits = 256;

// 2^-64: comparisons closer than this are refused rather than certified.
inline Rational guard_band() { return Rational(1) / Rational(pow(Integer(2), 64)); }

/// A real number enclosed by exact rational endpoints lower <= x <= upper.
struct CertifiedReal {
  Rational lower;
  Rational upper;
  int precision_bits = static_cast<int>(kCertifiedBits);

  Rational width() const { return upper - lower; }
  // Decimal strings rounded outward.
  std::string lower_decimal(int digits) const { return to_decimal(lower, digits, RoundDir::down); }
  std::string upper_decimal(int digits) const { return to_decimal(upper, digits, RoundDir::up); }
};

namespace detail {

// RAII pair of MPFR values bracketing a real; every op rounds lo down and hi up.
class Interval {
 public:
  Interval() {
    mpfr_init2(lo_, kCertifiedBits);
    mpfr_init2(hi_, kCertifiedBits);
  }
  explicit Interval(const Rational& q) : Interval() {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
  Interval(const Interval& o) : Interval() {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval pi() {
    Interval r;
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  bool positive() const { return mpfr_sgn(lo_) > 0; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  // Products and quotients are only needed for positive operands here.
  friend Interval operator*(const Interval& a, const Interval& b) {
    require_internal(a.positive() && b.positive(), "interval product expects positive operands");
    Interval r;
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    require_internal(a.positive() && b.positive(), "interval quotient expects positive operands");
    Interval r;
    mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  Interval sqrt() const {
    Interval r;
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
  }
  Interval log() const {
    Interval r;
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  CertifiedReal certify() const {
    CertifiedReal c;
    c.lower = get(lo_);
    c.upper = get(hi_);
    return c;
  }

 private:
  static Rational get(const mpfr_t x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
  }

  mpfr_t lo_, hi_;
};

}  // namespace detail

// sqrt(N) * (log N + 5) / (2*pi)
inline CertifiedReal ramare_bound(long n) {
  require_domain(n >= 2, "level must be at least 2");
  using detail::Interval;
  Interval nn{Rational(n)};
  Interval r = nn.sqrt() * (nn.log() + Interval(Rational(5))) / (Interval(Rational(2)) * Interval::pi());
  return r.certify();
}

// 100 * sqrt(N) * (log N + 5) * m_E
inline CertifiedReal theorem1_bound_value(long n, const Integer& modular_degree) {
  require_domain(n >= 2, "level must be at least 2");
  require_domain(modular_degree >= 1, "modular degree must be positive");
  using detail::Interval;
  Interval nn{Rational(n)};
  Interval r = Interval(Rational(100)) * nn.sqrt() * (nn.log() + Interval(Rational(5))) *
               Interval(Rational(modular_degree));
  return r.certify();
}

// Certified q < x. Throws UncertifiedComparison inside the guard band.
inline bool certified_less(const Rational& q, const CertifiedReal& x) {
  if (q + guard_band() < x.lower) return true;
  if (q - guard_band() >= x.upper) return false;
  throw UncertifiedComparison("comparison of " + to_string(q) + " with [" + x.lower_decimal(20) + ", " +
                              x.upper_decimal(20) + "] falls inside the guard band");
}

// Certified: every real root of f is < x.
inline bool certified_roots_below(const UniPoly& f, const CertifiedReal& x) {
  SturmChain s(f);
  if (s.count_above(x.lower - guard_band()) == 0) return true;
  if (s.count_above(x.upper + guard_band()) > 0) return false;
  throw UncertifiedComparison("a real root of " + f.to_string() + " lies inside the guard band of the bound");
}

}  // namespace rankiw
