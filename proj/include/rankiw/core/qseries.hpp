#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rankiw/core/numberfield.hpp"

namespace rankiw {

/// Truncated q-expansion a_0 + a_1 q + ... + a_{B-1} q^{B-1} + O(q^B).
///
/// The precision B is the number of known coefficients. Indexing at or past
/// B throws; arithmetic truncates to the smaller precision.
template <class Coeff>
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {}

  int precision() const { return static_cast<int>(c_.size()); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  const Coeff& operator[](int n) const {
    if (n < 0 || n >= precision())
      throw CapError("q-series coefficient " + std::to_string(n) + " is beyond precision " +
                     std::to_string(precision()));
    return c_[static_cast<size_t>(n)];
  }

  QSeries truncate(int prec) const {
    require_domain(prec <= precision(), "cannot raise precision by truncation");
    return QSeries(std::vector<Coeff>(c_.begin(), c_.begin() + prec));
  }

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    int prec = std::min(a.precision(), b.precision());
    std::vector<Coeff> r;
    r.reserve(static_cast<size_t>(prec));
    for (int n = 0; n < prec; ++n) r.push_back(a[n] + b[n]);
    return QSeries(std::move(r));
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    int prec = std::min(a.precision(), b.precision());
    std::vector<Coeff> r;
    r.reserve(static_cast<size_t>(prec));
    for (int n = 0; n < prec; ++n) r.push_back(a[n] - b[n]);
    return QSeries(std::move(r));
  }
  friend QSeries operator*(const Rational& s, const QSeries& a) {
    std::vector<Coeff> r;
    for (const auto& v : a.c_) r.push_back(s * v);
    return QSeries(std::move(r));
  }

 private:
  std::vector<Coeff> c_;
};

using RationalSeries = QSeries<Rational>;
using NFSeries = QSeries<NFElem>;

// Cauchy product truncated to min precision.
template <class Coeff>
QSeries<Coeff> series_mul(const QSeries<Coeff>& a, const QSeries<Coeff>& b) {
  int prec = std::min(a.precision(), b.precision());
  std::vector<Coeff> r;
  r.reserve(static_cast<size_t>(prec));
  for (int n = 0; n < prec; ++n) {
    Coeff acc = a[0] * b[n];
    for (int i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    r.push_back(std::move(acc));
  }
  return QSeries<Coeff>(std::move(r));
}

inline NFSeries promote(const RationalSeries& a, const NumberField& k) {
  std::vector<NFElem> r;
  for (const auto& v : a.coeffs()) r.emplace_back(k, v);
  return NFSeries(std::move(r));
}

inline NFSeries series_mul(const RationalSeries& a, const NFSeries& b) {
  require_domain(b.precision() > 0, "empty series");
  return series_mul(promote(a, b[0].field()), b);
}

inline std::string to_string(const RationalSeries& s, const std::string& var = "q") {
  std::string out;
  for (int n = 0; n < s.precision(); ++n) {
    const Rational& a = s[n];
    if (a == 0) continue;
    bool neg = a < 0;
    Rational mag = neg ? Rational(-a) : a;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = n == 0 ? "" : (n == 1 ? var : var + "^" + std::to_string(n));
    if (n == 0) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(s.precision()) + ")";
}

inline std::string to_string(const NFSeries& s, const std::string& var = "q") {
  std::string out;
  for (int n = 0; n < s.precision(); ++n) {
    if (s[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = n == 0 ? "" : (n == 1 ? var : var + "^" + std::to_string(n));
    std::string c = s[n].to_string();
    if (n == 0) out += c;
    else if (c == "1") out += mono;
    else out += "(" + c + ")*" + mono;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(s.precision()) + ")";
}

}  // namespace rankiw
