#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankiw/core/certified.hpp"
#include "rankiw/eisenstein.hpp"
#include "rankiw/modsym/newforms.hpp"

namespace rankiw {

inline long sturm_bound(long n) { return (n + 1 + 5) / 6; }

inline void require_level(long n) {
  if (!(is_prime(n) && n % 4 == 3)) throw DomainError("level must be a prime ≡ 3 (mod 4)");
}

// G_{1,chi}^2 for the quadratic character mod N.
inline RationalSeries rankin_product(long n, int prec) {
  require_level(n);
  require_domain(prec >= sturm_bound(n) + 10, "precision must be at least sturm(N) + 10");
  RationalSeries g = weight1_eisenstein(quadratic_character(n), prec).expansion;
  return series_mul(g, g);
}

struct OrbitCoefficient {
  Eigenform form;
  NFElem lambda;  // Lambda_f in the Hecke field; conjugate forms get the conjugates
};

struct DecompositionResult {
  long level = 0;
  Rational l0;                     // L(0, chi)
  Rational eisenstein_coefficient; // c
  std::vector<OrbitCoefficient> newforms;
  int precision = 0;               // coefficients 0..precision-1 compared
  int solve_rows = 0;              // rows n = 1..solve_rows used in the solve
  int residual_checked_to = 0;     // every n <= this matches exactly
  RationalSeries product;          // G^2 to `precision`
};

// Coefficient of Lambda * f summed over embeddings: Tr(Lambda a_n).
inline Rational embedded_sum(const NFElem& lambda, const NFElem& a) { return (lambda * a).trace(); }

// prec_request = 0 selects 2*sturm(N) + 10; eigenform coefficients stop at N - 1.
inline DecompositionResult decompose(long n, const std::vector<Eigenform>& forms, int prec_request = 0) {
  require_level(n);
  const long sturm = sturm_bound(n);
  if (prec_request != 0)
    require_domain(prec_request >= 2 * sturm + 1, "precision must cover 2*sturm(N) = " + std::to_string(2 * sturm));
  const int full = prec_request != 0 ? prec_request : static_cast<int>(2 * sturm + 10);
  const int prec = forms.empty() ? full : static_cast<int>(std::min<long>(full, n));
  const int rows = static_cast<int>(std::min<long>(sturm + 10, prec - 1));

  DirichletCharacter chi = quadratic_character(n);
  RationalSeries g2 = rankin_product(n, static_cast<int>(std::max<long>(full, sturm + 10))).truncate(prec);
  RationalSeries eis = weight2_eisenstein(n, prec).expansion;
  std::vector<NFSeries> fq;
  for (const auto& f : forms) {
    require_domain(f.level == n, "eigenform level mismatch");
    fq.push_back(eigenform_qexp(f, prec));
  }

  // Unknowns: c, then the power-basis coordinates of each Lambda_f.
  std::vector<size_t> offset;
  size_t unknowns = 1;
  for (const auto& f : forms) {
    offset.push_back(unknowns);
    unknowns += static_cast<size_t>(f.field.degree());
  }
  auto row_of = [&](int k) {
    QVector row(unknowns, Rational(0));
    row[0] = eis[k];
    for (size_t i = 0; i < forms.size(); ++i) {
      const NumberField& kf = forms[i].field;
      NFElem basis_elem(kf, Rational(1));
      NFElem w = NFElem::generator(kf);
      for (int j = 0; j < kf.degree(); ++j) {
        row[offset[i] + static_cast<size_t>(j)] = embedded_sum(basis_elem, fq[i][k]);
        basis_elem *= w;
      }
    }
    return row;
  };
  QMatrix a(static_cast<size_t>(rows), unknowns);
  QVector rhs;
  for (int k = 1; k <= rows; ++k) {
    QVector r = row_of(k);
    for (size_t j = 0; j < unknowns; ++j) a(static_cast<size_t>(k - 1), j) = r[j];
    rhs.push_back(g2[k]);
  }
  SolveResult sol = solve_exact(a, rhs);
  if (sol.status == SolveStatus::no_solution) throw InternalError("Rankin system is inconsistent at level " + std::to_string(n));
  if (sol.status == SolveStatus::underdetermined) throw InternalError("Rankin system is underdetermined at level " + std::to_string(n));

  DecompositionResult d;
  d.level = n;
  d.l0 = l_value_at_zero(chi);
  d.eisenstein_coefficient = sol.solution[0];
  for (size_t i = 0; i < forms.size(); ++i) {
    std::vector<Rational> coords(sol.solution.begin() + static_cast<long>(offset[i]),
                                 sol.solution.begin() + static_cast<long>(offset[i]) + forms[i].field.degree());
    d.newforms.push_back({forms[i], NFElem(forms[i].field, std::move(coords))});
  }
  d.precision = prec;
  d.solve_rows = rows;
  d.product = g2;

  // Residual over every computed coefficient, the constant term included.
  for (int k = 0; k < prec; ++k) {
    Rational v = d.eisenstein_coefficient * eis[k];
    for (size_t i = 0; i < forms.size(); ++i) v += embedded_sum(d.newforms[i].lambda, fq[i][k]);
    if (v != g2[k])
      throw InternalError("Rankin residual is nonzero at q^" + std::to_string(k) + " for level " + std::to_string(n));
  }
  d.residual_checked_to = prec - 1;
  return d;
}

inline DecompositionResult decompose(long n, int prec_request = 0) {
  require_level(n);
  return decompose(n, newform_decomposition(build_space(n, 1)), prec_request);
}

struct KeyEqualityCheck {
  bool pass = false;
  Rational l0;
  Rational sum;         // c + sum of embedded Lambda
  Rational difference;  // l0 - sum, exactly 0 on success
};

// First Fourier coefficient: L(0, chi) = c + sum over embeddings of Lambda.
inline KeyEqualityCheck key_equality_check(const DecompositionResult& d) {
  KeyEqualityCheck k;
  k.l0 = d.l0;
  k.sum = d.eisenstein_coefficient;
  for (const auto& o : d.newforms) k.sum += o.lambda.trace();
  k.difference = k.l0 - k.sum;
  k.pass = k.difference == 0;
  return k;
}

struct DenominatorCheck {
  bool skipped = true;      // no modular degree supplied
  bool pass = false;
  Integer modular_degree;
  Integer odd_denominator;
  long witness_m = 0;       // m with oddpart(den) | m^2 * oddpart(m_E)
};

struct FormBoundCheck {
  std::string label;
  UniPoly lambda_charpoly;  // roots are the embeddings of Lambda
  bool nonnegative = false;
  bool below_bound = false;
  bool below_bound_times8 = false;
  std::optional<DenominatorCheck> denominator;  // rational forms only
};

struct BoundReport {
  CertifiedReal ramare_bound;  // sqrt(N)(log N + 5)/(2 pi)
  bool l0_below_bound = false;
  std::vector<FormBoundCheck> forms;
  KeyEqualityCheck key_equality;

  // The 8*Lambda reading is reported separately; it is not implied by the key equality.
  bool all_pass() const {
    if (!l0_below_bound || !key_equality.pass) return false;
    for (const auto& f : forms) {
      if (!f.nonnegative || !f.below_bound) return false;
      if (f.denominator && !f.denominator->skipped && !f.denominator->pass) return false;
    }
    return true;
  }
  bool times8_pass() const {
    for (const auto& f : forms)
      if (!f.below_bound_times8) return false;
    return true;
  }
};

// Orders of rational torsion points on elliptic curves over Q.
inline const std::vector<long>& torsion_orders() {
  static const std::vector<long> v{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  return v;
}

inline DenominatorCheck denominator_check(const Rational& lambda, const std::optional<Integer>& modular_degree) {
  DenominatorCheck c;
  c.odd_denominator = odd_part(Integer(lambda.get_den()));
  if (!modular_degree) return c;
  require_domain(*modular_degree >= 1, "modular degree must be positive");
  c.skipped = false;
  c.modular_degree = *modular_degree;
  Integer me = odd_part(*modular_degree);
  for (long m : torsion_orders()) {
    if (divides(c.odd_denominator, Integer(m) * m * me)) {
      c.pass = true;
      c.witness_m = m;
      break;
    }
  }
  return c;
}

// modular_degrees: label -> m_E for rational forms; missing entries skip the denominator check.
inline BoundReport verify_bounds(const DecompositionResult& d, const std::map<std::string, Integer>& modular_degrees = {}) {
  BoundReport r;
  r.ramare_bound = ramare_bound(d.level);
  r.l0_below_bound = certified_less(d.l0, r.ramare_bound);
  r.key_equality = key_equality_check(d);
  for (const auto& o : d.newforms) {
    FormBoundCheck f;
    f.label = o.form.label;
    f.lambda_charpoly = o.lambda.charpoly();
    f.nonnegative = count_negative_roots(f.lambda_charpoly) == 0;
    f.below_bound = certified_roots_below(f.lambda_charpoly, r.ramare_bound);
    f.below_bound_times8 = certified_roots_below((Rational(8) * o.lambda).charpoly(), r.ramare_bound);
    if (o.form.is_rational()) {
      auto it = modular_degrees.find(o.form.label);
      std::optional<Integer> me;
      if (it != modular_degrees.end()) me = it->second;
      f.denominator = denominator_check(o.lambda.rational_value(), me);
    }
    r.forms.push_back(std::move(f));
  }
  return r;
}

}  // namespace rankiw
