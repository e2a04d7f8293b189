#pragma once

#include <utility>
#include <vector>

#include "rankiw/dirichlet.hpp"
#include "rankiw/modsym/newforms.hpp"

namespace rankiw {

// {0, a/m} as a sum of Manin symbols (c:d), one per pair of consecutive
// continued-fraction convergents (starting from 0/1, 1/0).
inline std::vector<std::pair<long, long>> manin_path(long a, long m) {
  require_domain(m > 0, "denominator must be positive");
  std::vector<long> ps{0, 1}, qs{1, 0};
  long x = a, y = m;
  while (y != 0) {
    long q = x >= 0 ? x / y : -((-x + y - 1) / y);
    long r = x - q * y;
    ps.push_back(q * ps.back() + ps[ps.size() - 2]);
    qs.push_back(q * qs.back() + qs[qs.size() - 2]);
    x = y;
    y = r;
  }
  std::vector<std::pair<long, long>> out;
  for (size_t j = 1; j < ps.size(); ++j) {
    long p0 = ps[j - 1], q0 = qs[j - 1], p1 = ps[j], q1 = qs[j];
    // {p0/q0, p1/q1} = g{0, oo} with g = [[p1, p0], [q1, q0]] up to the sign of det
    long det = p1 * q0 - p0 * q1;
    out.emplace_back(det == 1 ? q1 : -q1, q0);
  }
  return out;
}

// Rescale phi so its values on the integral cuspidal Manin-symbol lattice generate Z.
inline QVector normalize_on_cuspidal_lattice(const ModularSymbolSpace& s, const QVector& phi) {
  const size_t n = static_cast<size_t>(s.level());
  auto val = [&](size_t i) { return dot(phi, s.generator_coords(i)); };
  // lattice basis: (1:t) for t != 0, and (1:0) + (0:1)
  std::vector<Rational> lat;
  for (size_t i = 1; i < n; ++i) lat.push_back(val(i));
  lat.push_back(val(0) + val(n));
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& q : lat) {
    if (q == 0) continue;
    num_gcd = gcd(num_gcd, q.get_num());
    den_lcm = lcm(den_lcm, q.get_den());
  }
  require_internal(num_gcd != 0, "functional vanishes on the cuspidal lattice");
  Rational scale = make_rational(den_lcm, abs(num_gcd));
  QVector out = phi;
  for (auto& v : out) v *= scale;
  return out;
}

// phi applied to the (twisted) winding element: {0, oo} for trivial chi,
// sum_a chi(a) {0, a/N} otherwise.
inline Rational winding_value(const ModularSymbolSpace& s, const QVector& phi, const DirichletCharacter& chi) {
  const long n = s.level();
  if (chi.is_trivial) return dot(phi, s.generator_coords(s.p1().index(0, 1)));
  require_domain(chi.modulus == n, "twist modulus must equal the level");
  Rational w = 0;
  for (long a = 1; a < n; ++a) {
    int c = chi(a);
    if (c == 0) continue;
    for (auto [x, y] : manin_path(a, n)) w += c * dot(phi, s.coords_of(x, y));
  }
  return w;
}

// Left eigenvector of the Hecke action on the sign quotient with f's eigenvalues.
inline QVector eigen_functional(const ModularSymbolSpace& s, const Eigenform& f) {
  require_domain(f.is_rational(), "eigen functional is built for rational eigenforms");
  const size_t dim = s.dimension();
  QMatrix stacked(0, dim);
  for (const auto& [ell, a] : f.eigenvalues) {
    QMatrix m = s.hecke_matrix(ell).transpose() - a.rational_value() * QMatrix::identity(dim);
    stacked = QMatrix::vstack(stacked, m);
    Subspace k = kernel(stacked);
    if (k.dim() == 1) return k.basis.column(0);
    require_internal(k.dim() > 0, "no eigenvector with the given eigenvalues on the sign quotient");
  }
  throw InternalError("eigenvalues up to the Hecke bound do not cut out a line");
}

/// Coordinate of the (twisted) winding element in the f-isotypic part of the
/// integral cuspidal lattice. Sign +1 for trivial chi, -1 for the odd
/// quadratic character. Equals the algebraic L-value up to sign and a power of 2.
inline Rational twisted_winding_ratio(const Eigenform& f, const DirichletCharacter& chi) {
  if (!f.is_rational()) throw UnsupportedError("winding ratios are only provided for rational eigenforms");
  int sign = 1;
  if (!chi.is_trivial) {
    if (!chi.is_odd) throw UnsupportedError("only the odd quadratic twist is supported");
    sign = -1;
  }
  require_domain(chi.modulus == f.level, "character modulus must equal the level");
  ModularSymbolSpace s(f.level, sign);
  QVector phi = normalize_on_cuspidal_lattice(s, eigen_functional(s, f));
  return winding_value(s, phi, chi);
}

}  // namespace rankiw
