#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rankiw/core/factor.hpp"
#include "rankiw/core/matrix.hpp"

namespace rankiw {

/// Q[x]/(g) for a monic irreducible g. Cheap to copy; fields compare by minpoly.
class NumberField {
 public:
  // Q itself, presented as Q[x]/(x).
  NumberField() : NumberField(Trusted{}, UniPoly::x(), "a") {}

  explicit NumberField(UniPoly minpoly, std::string var = "a") {
    require_domain(minpoly.is_monic(), "number field minpoly must be monic");
    require_domain(minpoly.degree() >= 1, "number field minpoly must have positive degree");
    require_domain(is_irreducible(minpoly), "number field minpoly must be irreducible: " + minpoly.to_string());
    d_ = std::make_shared<const Data>(Data{std::move(minpoly), std::move(var)});
  }

  static NumberField rationals() { return NumberField(); }

  const UniPoly& minpoly() const { return d_->minpoly; }
  int degree() const { return d_->minpoly.degree(); }
  const std::string& var() const { return d_->var; }
  bool is_rational() const { return degree() == 1; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->minpoly == b.d_->minpoly;
  }
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

 private:
  struct Data {
    UniPoly minpoly;
    std::string var;
  };

  struct Trusted {};
  NumberField(Trusted, UniPoly minpoly, std::string var)
      : d_(std::make_shared<const Data>(Data{std::move(minpoly), std::move(var)})) {}

  std::shared_ptr<const Data> d_;
};

/// Element of a NumberField in power-basis coordinates.
class NFElem {
 public:
  NFElem() : field_(NumberField::rationals()), c_(1, Rational(0)) {}
  NFElem(const NumberField& k, const Rational& a) : field_(k), c_(static_cast<size_t>(k.degree()), Rational(0)) {
    c_[0] = a;
  }
  NFElem(const NumberField& k, std::vector<Rational> coords) : field_(k), c_(std::move(coords)) {
    require_domain(c_.size() == static_cast<size_t>(k.degree()), "coordinate count must equal field degree");
  }
  static NFElem from_poly(const NumberField& k, const UniPoly& p) {
    UniPoly r = p % k.minpoly();
    std::vector<Rational> c(static_cast<size_t>(k.degree()), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) c[static_cast<size_t>(i)] = r.coeff(i);
    return NFElem(k, std::move(c));
  }
  static NFElem generator(const NumberField& k) { return from_poly(k, UniPoly::x()); }

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }
  UniPoly to_poly() const { return UniPoly(c_); }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Rational& rational_value() const {
    require_domain(is_rational(), "number field element is not rational");
    return c_[0];
  }

  friend bool operator==(const NFElem& a, const NFElem& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }
  friend bool operator==(const NFElem& a, long v) { return a.is_rational() && a.c_[0] == v; }
  friend bool operator!=(const NFElem& a, long v) { return !(a == v); }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    NFElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend NFElem operator-(const NFElem& a) {
    NFElem r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    return from_poly(a.field_, a.to_poly() * b.to_poly());
  }
  friend NFElem operator*(const Rational& s, const NFElem& a) {
    NFElem r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  NFElem& operator+=(const NFElem& b) { return *this = *this + b; }
  NFElem& operator-=(const NFElem& b) { return *this = *this - b; }
  NFElem& operator*=(const NFElem& b) { return *this = *this * b; }

  NFElem inverse() const {
    require_domain(!is_zero(), "inverse of zero in a number field");
    auto [g, s, t] = UniPoly::xgcd(to_poly(), field_.minpoly());
    require_internal(g.degree() == 0, "non-invertible element in a field");
    return from_poly(field_, s);
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

  // Matrix of multiplication-by-this on the power basis (columns = images of basis vectors).
  QMatrix mult_matrix() const {
    const size_t d = c_.size();
    QMatrix m(d, d);
    UniPoly self = to_poly();
    for (size_t j = 0; j < d; ++j) {
      NFElem img = from_poly(field_, self * UniPoly::monomial(static_cast<int>(j)));
      for (size_t i = 0; i < d; ++i) m(i, j) = img.c_[i];
    }
    return m;
  }

  // Characteristic polynomial of multiplication-by-this; its roots are the embeddings.
  UniPoly charpoly() const { return rankiw::charpoly(mult_matrix()); }

  Rational trace() const {
    QMatrix m = mult_matrix();
    Rational t = 0;
    for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
  }

  UniPoly minpoly() const { return squarefree_part(charpoly()); }

  std::string to_string() const {
    if (field_.is_rational()) return rankiw::to_string(c_[0]);
    return to_poly().to_string(field_.var());
  }

 private:
  static void check_same(const NFElem& a, const NFElem& b) {
    if (a.field_ != b.field_) throw DomainError("arithmetic across different number fields");
  }

  NumberField field_;
  std::vector<Rational> c_;
};

/// Isomorphic field with a canonical generator, and the image of the old generator.
struct FieldPresentation {
  NumberField field;
  NFElem old_generator;
};

// Quadratic fields become Q[w]/(w^2 - w - (D-1)/4) when D = 1 mod 4, else Q[w]/(w^2 - D),
// D squarefree. The old generator maps to (-b + s*sqrt(D))/2 with s > 0.
// Other degrees are returned unchanged.
inline FieldPresentation canonical_presentation(const NumberField& k) {
  if (k.degree() == 1) {
    NumberField q = NumberField::rationals();
    return {q, NFElem(q, -k.minpoly().coeff(0))};
  }
  if (k.degree() != 2) return {k, NFElem::generator(k)};
  const Rational b = k.minpoly().coeff(1), c = k.minpoly().coeff(0);
  Rational disc = b * b - 4 * c;
  // disc = (num/den), sqrt(disc) = sqrt(num*den)/den
  Integer n = disc.get_num() * disc.get_den();
  Integer sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  Integer sq = 1, d0 = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    while (divides(p * p, m)) {
      m /= p * p;
      sq *= p;
    }
  }
  d0 = sign * m;
  Rational s = Rational(sq) / Rational(disc.get_den());
  s.canonicalize();
  Integer d0_mod4 = mod(d0, Integer(4));
  if (d0_mod4 == 1) {
    NumberField f(UniPoly({Rational(-(d0 - 1) / 4), Rational(-1), Rational(1)}), "w");
    // sqrt(d0) = 2w - 1
    NFElem w = NFElem::generator(f);
    NFElem sqrt_d0 = Rational(2) * w - NFElem(f, Rational(1));
    NFElem old = NFElem(f, Rational(-b / 2)) + Rational(s / 2) * sqrt_d0;
    return {f, old};
  }
  NumberField f(UniPoly({Rational(-d0), Rational(0), Rational(1)}), "w");
  NFElem old = NFElem(f, Rational(-b / 2)) + Rational(s / 2) * NFElem::generator(f);
  return {f, old};
}

// Apply the field map x -> image to an element written in the old power basis.
inline NFElem map_element(const NFElem& a, const NFElem& image_of_generator) {
  const NumberField& target = image_of_generator.field();
  NFElem acc(target, Rational(0));
  NFElem power(target, Rational(1));
  for (const auto& c : a.coords()) {
    acc += c * power;
    power *= image_of_generator;
  }
  return acc;
}

}  // namespace rankiw
