#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rankiw/core/factor.hpp"
#include "rankiw/core/numberfield.hpp"
#include "rankiw/core/qseries.hpp"
#include "rankiw/modsym/space.hpp"

namespace rankiw {

/// One Galois orbit of newforms, f = q + sum a_n q^n with a_ell in the Hecke field.
struct Eigenform {
  long level = 0;
  NumberField field;
  std::map<long, NFElem> eigenvalues;  // every prime ell <= hecke_bound except the level
  long hecke_bound = 0;
  std::string label;

  bool is_rational() const { return field.degree() == 1; }

  const NFElem& eigenvalue(long ell) const {
    require_domain(is_prime(ell), "eigenvalues are indexed by primes");
    if (ell == level) throw UnsupportedError("a_N needs U_N, which is not implemented");
    if (ell > hecke_bound)
      throw CapError("a_" + std::to_string(ell) + " is beyond the computed Hecke bound " + std::to_string(hecke_bound));
    return eigenvalues.at(ell);
  }

  // a_n for n coprime to the level, from the Hecke recurrences.
  NFElem coefficient(long n) const {
    require_domain(n >= 1, "coefficient index must be positive");
    if (n % level == 0) throw UnsupportedError("coefficients at multiples of N need U_N");
    NFElem acc(field, Rational(1));
    for (auto [ell, e] : factor_integer(n)) {
      const NFElem& a = eigenvalue(ell);
      NFElem prev(field, Rational(1)), cur = a;
      for (int r = 1; r < e; ++r) {
        NFElem next = a * cur - Rational(ell) * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      acc *= cur;
    }
    return acc;
  }
};

// q-expansion a_0..a_{prec-1}; prec may not exceed N.
inline NFSeries eigenform_qexp(const Eigenform& f, int prec) {
  require_domain(prec >= 1, "precision must be positive");
  if (prec > f.level)
    throw UnsupportedError("eigenform q-expansion precision " + std::to_string(prec) + " exceeds the level " +
                           std::to_string(f.level) + " (U_N is not implemented)");
  std::vector<NFElem> c;
  c.emplace_back(f.field, Rational(0));
  for (long n = 1; n < prec; ++n) c.push_back(f.coefficient(n));
  return NFSeries(std::move(c));
}

namespace detail {

// Sum_k coeff_k * T_{ell_k}.
struct HeckeCombo {
  std::vector<std::pair<long, long>> terms;

  std::string to_string() const {
    std::string s;
    for (auto [ell, k] : terms) s += (s.empty() ? "" : " + ") + std::to_string(k) + "*T" + std::to_string(ell);
    return s;
  }
};

class HeckeCache {
 public:
  explicit HeckeCache(const ModularSymbolSpace& s) : s_(s) {}

  const QMatrix& full(long ell) {
    auto it = full_.find(ell);
    if (it == full_.end()) it = full_.emplace(ell, s_.hecke_matrix(ell)).first;
    return it->second;
  }
  QMatrix full(const HeckeCombo& c) {
    QMatrix m(s_.dimension(), s_.dimension());
    for (auto [ell, k] : c.terms) m = m + Rational(k) * full(ell);
    return m;
  }
  QMatrix cusp(const HeckeCombo& c) { return restrict_to(full(c), s_.cuspidal()); }

 private:
  const ModularSymbolSpace& s_;
  std::map<long, QMatrix> full_;
};

struct SplitStep {
  HeckeCombo op;
  UniPoly factor;
};

struct Piece {
  Subspace space;  // inside the cuspidal subspace, cuspidal coordinates
  std::vector<SplitStep> chain;
};

inline std::vector<HeckeCombo> candidate_operators(long level) {
  std::vector<HeckeCombo> out;
  std::vector<long> ps;
  for (long p : primes_up_to(std::max<long>(50, (level + 1) / 6 + 1)))
    if (p != level) ps.push_back(p);
  for (long p : ps) out.push_back({{{p, 1}}});
  size_t few = std::min<size_t>(ps.size(), 6);
  for (size_t i = 0; i < few; ++i)
    for (size_t j = i + 1; j < few; ++j)
      for (long k = 1; k <= 3; ++k) out.push_back({{{ps[i], 1}, {ps[j], k}}});
  return out;
}

inline std::string label_suffix(size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return s;
}

}  // namespace detail

/// Galois orbits of newforms on the plus-cuspidal subspace, canonically ordered.
/// hecke_bound = 0 selects max(50, N).
inline std::vector<Eigenform> newform_decomposition(const ModularSymbolSpace& s, long hecke_bound = 0) {
  using namespace detail;
  require_domain(s.sign() == 1, "newform decomposition expects the plus quotient");
  const long n = s.level();
  if (hecke_bound == 0) hecke_bound = std::max<long>(50, n);
  std::vector<Eigenform> out;
  const size_t cdim = s.cuspidal_dimension();
  if (cdim == 0) return out;

  HeckeCache cache(s);
  const auto candidates = candidate_operators(n);

  struct Finished {
    Piece piece;
    HeckeCombo gen;
    UniPoly poly;
  };
  std::vector<Finished> done;
  std::vector<Piece> todo{{kernel(QMatrix(0, cdim)), {}}};
  while (!todo.empty()) {
    Piece piece = std::move(todo.back());
    todo.pop_back();
    bool resolved = false;
    for (const auto& op : candidates) {
      QMatrix a = restrict_to(cache.cusp(op), piece.space);
      Factorization fac = factor_poly(charpoly(a));
      if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) {
        done.push_back({piece, op, fac.factors[0].factor});
        resolved = true;
        break;
      }
      if (fac.factors.size() == 1) continue;
      for (auto it = fac.factors.rbegin(); it != fac.factors.rend(); ++it) {
        Subspace k = kernel(eval_poly(it->factor, a));
        require_internal(static_cast<int>(k.dim()) == it->factor.degree() * it->multiplicity,
                         "Hecke operator is not semisimple on the cuspidal space");
        Piece child{compose(piece.space, k), piece.chain};
        child.chain.push_back({op, it->factor});
        todo.push_back(std::move(child));
      }
      resolved = true;
      break;
    }
    if (!resolved)
      throw InternalError("could not separate a Hecke-stable piece of dimension " +
                          std::to_string(piece.space.dim()) + " at level " + std::to_string(n));
  }

  // Eigenvalues through a K-valued eigenfunctional on the full plus quotient.
  const size_t vdim = s.dimension();
  for (const auto& fin : done) {
    const int d = fin.poly.degree();
    QMatrix stacked(0, vdim);
    std::vector<SplitStep> steps = fin.piece.chain;
    steps.push_back({fin.gen, fin.poly});
    for (const auto& st : steps) stacked = QMatrix::vstack(stacked, eval_poly(st.factor, cache.full(st.op).transpose()));
    Subspace dual = kernel(stacked);
    require_internal(static_cast<int>(dual.dim()) == d, "dual eigenspace has the wrong dimension");

    NumberField raw(fin.poly);
    NFElem alpha = NFElem::generator(raw);
    // h(x)/(x - alpha) = sum b_j x^j
    std::vector<NFElem> b(static_cast<size_t>(d), NFElem(raw, Rational(0)));
    b[static_cast<size_t>(d - 1)] = NFElem(raw, Rational(1));
    for (int j = d - 1; j > 0; --j)
      b[static_cast<size_t>(j - 1)] = NFElem(raw, fin.poly.coeff(j)) + alpha * b[static_cast<size_t>(j)];
    QMatrix gt = cache.full(fin.gen).transpose();
    QVector v = dual.basis.column(0);
    // psi_k: coefficient of alpha^k in the eigenfunctional
    std::vector<QVector> psi(static_cast<size_t>(d), QVector(vdim, Rational(0)));
    for (int j = 0; j < d; ++j) {
      const auto& bc = b[static_cast<size_t>(j)].coords();
      for (int k = 0; k < d; ++k) {
        if (bc[static_cast<size_t>(k)] == 0) continue;
        for (size_t r = 0; r < vdim; ++r) psi[static_cast<size_t>(k)][r] += bc[static_cast<size_t>(k)] * v[r];
      }
      v = gt * v;
    }
    const size_t ngen = s.p1().size();
    std::vector<QVector> psi_gen(ngen, QVector(static_cast<size_t>(d)));
    for (size_t i = 0; i < ngen; ++i)
      for (int k = 0; k < d; ++k) psi_gen[i][static_cast<size_t>(k)] = dot(psi[static_cast<size_t>(k)], s.generator_coords(i));
    size_t x0 = 0;
    while (x0 < ngen && std::all_of(psi_gen[x0].begin(), psi_gen[x0].end(), [](const Rational& q) { return q == 0; })) ++x0;
    require_internal(x0 < ngen, "eigenfunctional vanishes on every Manin symbol");
    NFElem inv0 = NFElem(raw, psi_gen[x0]).inverse();

    FieldPresentation pres = canonical_presentation(raw);
    Eigenform f;
    f.level = n;
    f.field = pres.field;
    f.hecke_bound = hecke_bound;
    for (long ell : primes_up_to(hecke_bound)) {
      if (ell == n) continue;
      auto counts = s.hecke_image_counts(x0, ell);
      QVector acc(static_cast<size_t>(d), Rational(0));
      for (size_t g = 0; g < ngen; ++g) {
        if (counts[g] == 0) continue;
        for (int k = 0; k < d; ++k) acc[static_cast<size_t>(k)] += counts[g] * psi_gen[g][static_cast<size_t>(k)];
      }
      NFElem a = NFElem(raw, acc) * inv0;
      f.eigenvalues.emplace(ell, map_element(a, pres.old_generator));
    }
    out.push_back(std::move(f));
  }

  // Canonical order: degree, then minimal polynomials of a_2, a_3, ...
  std::vector<std::vector<UniPoly>> keys(out.size());
  for (size_t i = 0; i < out.size(); ++i)
    for (const auto& [ell, a] : out[i].eigenvalues) keys[i].push_back(a.minpoly());
  std::vector<size_t> order(out.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (out[x].field.degree() != out[y].field.degree()) return out[x].field.degree() < out[y].field.degree();
    return std::lexicographical_compare(keys[x].begin(), keys[x].end(), keys[y].begin(), keys[y].end(),
                                        [](const UniPoly& p, const UniPoly& q) { return lex_less(p, q); });
  });
  std::vector<Eigenform> sorted;
  for (size_t i = 0; i < order.size(); ++i) {
    sorted.push_back(std::move(out[order[i]]));
    sorted.back().label = std::to_string(n) + label_suffix(i);
  }
  return sorted;
}

}  // namespace rankiw
