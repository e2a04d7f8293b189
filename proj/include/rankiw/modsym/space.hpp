#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "rankiw/core/matrix.hpp"
#include "rankiw/modsym/heilbronn.hpp"
#include "rankiw/modsym/p1.hpp"

namespace rankiw {

/// Weight-2 modular symbols for Gamma_0(N), N prime, modulo the Manin
/// relations and (for sign +1 or -1) the star relation x = sign * x*.
///
/// Basis element j is the image of Manin symbol basis_generators()[j].
/// Operators act on column coordinate vectors.
class ModularSymbolSpace {
 public:
  ModularSymbolSpace(long n, int sign) : p1_(n), sign_(sign) {
    require_domain(sign == 1 || sign == -1 || sign == 0, "sign must be +1, -1 or 0");
    build();
    build_boundary();
  }

  long level() const { return p1_.modulus(); }
  int sign() const { return sign_; }
  const P1List& p1() const { return p1_; }
  size_t dimension() const { return basis_gens_.size(); }
  const std::vector<size_t>& basis_generators() const { return basis_gens_; }

  // Coordinates of the Manin symbol with index i.
  const QVector& generator_coords(size_t i) const { return coords_[i]; }
  QVector coords_of(long c, long d) const { return coords_[p1_.index(c, d)]; }

  // Rows: [infinity], [0].
  const QMatrix& boundary_matrix() const { return boundary_; }
  const Subspace& cuspidal() const { return cuspidal_; }
  size_t cuspidal_dimension() const { return cuspidal_.dim(); }

  // Multiplicities of the Manin symbols appearing in T_ell(generator i).
  std::vector<long> hecke_image_counts(size_t i, long ell) const {
    check_hecke_index(ell);
    std::vector<long> counts(p1_.size(), 0);
    auto [u, v] = p1_.element(i);
    for (const auto& h : hecke_matrices(ell)) ++counts[p1_.index(u * h[0] + v * h[2], u * h[1] + v * h[3])];
    return counts;
  }

  // T_ell on the whole sign quotient.
  QMatrix hecke_matrix(long ell) const {
    check_hecke_index(ell);
    const auto hs = hecke_matrices(ell);
    const size_t dim = dimension();
    QMatrix t(dim, dim);
    std::vector<long> counts(p1_.size());
    for (size_t j = 0; j < dim; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      auto [u, v] = p1_.element(basis_gens_[j]);
      for (const auto& h : hs) ++counts[p1_.index(u * h[0] + v * h[2], u * h[1] + v * h[3])];
      for (size_t g = 0; g < counts.size(); ++g) {
        if (counts[g] == 0) continue;
        const QVector& c = coords_[g];
        for (size_t r = 0; r < dim; ++r)
          if (c[r] != 0) t(r, j) += counts[g] * c[r];
      }
    }
    return t;
  }

  // T_ell restricted to the cuspidal subspace, in its canonical basis.
  QMatrix hecke_operator(long ell) const { return restrict_to(hecke_matrix(ell), cuspidal_); }

  QMatrix star_matrix() const {
    const size_t dim = dimension();
    QMatrix s(dim, dim);
    for (size_t j = 0; j < dim; ++j) {
      const QVector& c = coords_[p1_.apply_star(basis_gens_[j])];
      for (size_t r = 0; r < dim; ++r) s(r, j) = c[r];
    }
    return s;
  }

 private:
  void check_hecke_index(long ell) const {
    require_domain(is_prime(ell), "Hecke operators are implemented for prime index");
    if (ell == level()) throw UnsupportedError("U_N is not implemented");
  }

  // Signed union-find over generators for the two-term relations.
  struct SignedDsu {
    std::vector<size_t> parent;
    std::vector<int> sign;  // x_i = sign[i] * x_parent[i]
    std::vector<bool> zero; // valid at roots

    explicit SignedDsu(size_t n) : parent(n), sign(n, 1), zero(n, false) {
      std::iota(parent.begin(), parent.end(), size_t{0});
    }
    std::pair<size_t, int> find(size_t i) {
      int s = 1;
      size_t r = i;
      while (parent[r] != r) {
        s *= sign[r];
        r = parent[r];
      }
      // path compression with accumulated signs
      size_t cur = i;
      int cs = s;
      while (parent[cur] != cur) {
        size_t next = parent[cur];
        int next_sign = cs * sign[cur];
        parent[cur] = r;
        sign[cur] = cs;
        cur = next;
        cs = next_sign;
      }
      return {r, s};
    }
    // impose x_i = eps * x_j
    void relate(size_t i, size_t j, int eps) {
      auto [ri, si] = find(i);
      auto [rj, sj] = find(j);
      if (ri == rj) {
        if (si != eps * sj) zero[ri] = true;
        return;
      }
      // keep the smaller index as root so the basis is stable
      if (ri < rj) {
        std::swap(ri, rj);
        std::swap(si, sj);
      }
      parent[ri] = rj;
      sign[ri] = si * eps * sj;
      zero[rj] = zero[rj] || zero[ri];
    }
  };

  void build() {
    const size_t n = p1_.size();
    SignedDsu dsu(n);
    for (size_t i = 0; i < n; ++i) {
      dsu.relate(i, p1_.apply_s(i), -1);
      if (sign_ != 0) dsu.relate(i, p1_.apply_star(i), sign_);
    }
    // Surviving classes, ordered by root index.
    std::vector<long> class_col(n, -1);
    std::vector<size_t> class_root;
    for (size_t i = 0; i < n; ++i) {
      auto [r, s] = dsu.find(i);
      if (r == i && !dsu.zero[r]) {
        class_col[i] = static_cast<long>(class_root.size());
        class_root.push_back(i);
      }
    }
    const size_t ncls = class_root.size();
    std::vector<std::pair<long, int>> gen_class(n);
    for (size_t i = 0; i < n; ++i) {
      auto [r, s] = dsu.find(i);
      gen_class[i] = dsu.zero[r] ? std::make_pair(-1L, 0) : std::make_pair(class_col[r], s);
    }
    // Three-term relations on the class columns.
    QMatrix rel(n, ncls);
    for (size_t i = 0; i < n; ++i)
      for (size_t g : {i, p1_.apply_t(i), p1_.apply_t2(i)}) {
        auto [col, s] = gen_class[g];
        if (col >= 0) rel(i, static_cast<size_t>(col)) += s;
      }
    auto piv = rel.rref_in_place();
    std::vector<long> pivot_row(ncls, -1);
    for (size_t k = 0; k < piv.size(); ++k) pivot_row[piv[k]] = static_cast<long>(k);
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < ncls; ++c)
      if (pivot_row[c] < 0) free_cols.push_back(c);
    const size_t dim = free_cols.size();
    std::vector<QVector> class_coords(ncls, QVector(dim, Rational(0)));
    for (size_t k = 0; k < dim; ++k) class_coords[free_cols[k]][k] = 1;
    for (size_t c = 0; c < ncls; ++c) {
      if (pivot_row[c] < 0) continue;
      for (size_t k = 0; k < dim; ++k) class_coords[c][k] = -rel(static_cast<size_t>(pivot_row[c]), free_cols[k]);
    }
    coords_.assign(n, QVector(dim, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
      auto [col, s] = gen_class[i];
      if (col < 0) continue;
      for (size_t k = 0; k < dim; ++k) coords_[i][k] = s * class_coords[static_cast<size_t>(col)][k];
    }
    for (size_t c : free_cols) basis_gens_.push_back(class_root[c]);
  }

  void build_boundary() {
    const size_t dim = dimension();
    const size_t inf_sym = static_cast<size_t>(level());  // (0:1) -> [inf] - [0]
    boundary_ = QMatrix(2, dim);
    for (size_t j = 0; j < dim; ++j) {
      size_t g = basis_gens_[j];
      if (g == inf_sym) {
        boundary_(0, j) = 1;
        boundary_(1, j) = -1;
      } else if (g == 0) {  // (1:0) -> [0] - [inf]
        boundary_(0, j) = -1;
        boundary_(1, j) = 1;
      }
    }
    cuspidal_ = kernel(boundary_);
  }

  P1List p1_;
  int sign_;
  std::vector<size_t> basis_gens_;
  std::vector<QVector> coords_;
  QMatrix boundary_;
  Subspace cuspidal_;
};

inline ModularSymbolSpace build_space(long n, int sign) { return ModularSymbolSpace(n, sign); }

}  // namespace rankiw
