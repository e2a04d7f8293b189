#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rankiw/eisenstein.hpp"
#include "rankiw/modsym/winding.hpp"
#include "rankiw/rankin.hpp"
#include "rankiw/verify/oracles.hpp"

namespace rankiw {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool informational = false;  // reported, never fails the run
  std::string detail;
};

struct SelftestReport {
  long n_max = 0;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.informational) return false;
    return true;
  }
  size_t failures() const {
    size_t k = 0;
    for (const auto& c : checks) k += (!c.pass && !c.informational) ? 1 : 0;
    return k;
  }
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(SelftestReport& r) : r_(r) {}

  void check(const std::string& suite, const std::string& name, const std::function<std::string()>& body,
             bool informational = false) {
    CheckResult c{suite, name, false, informational, ""};
    try {
      c.detail = body();
      c.pass = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

 private:
  SelftestReport& r_;
};

inline std::string fail_if(bool bad, const std::string& what) { return bad ? what : std::string(); }

}  // namespace detail

/// Property suites over every prime N = 3 (mod 4) up to n_max, plus the
/// level-11 golden values when n_max >= 11.
inline SelftestReport run_selftest(long n_max) {
  using detail::fail_if;
  SelftestReport rep;
  rep.n_max = n_max;
  detail::Recorder rec(rep);

  for (long n = 3; n <= n_max; ++n) {
    if (!is_prime(n) || n % 4 != 3) continue;
    const std::string lv = "N=" + std::to_string(n);

    rec.check("dirichlet", lv + " character axioms", [&] {
      auto chi = quadratic_character(n);
      long s = 0;
      for (long a = 0; a < n; ++a) {
        s += chi(a);
        for (long b = 0; b < n; ++b)
          if (chi(a * b) != chi(a) * chi(b)) return "not multiplicative at " + std::to_string(a) + "," + std::to_string(b);
      }
      return fail_if(s != 0 || !chi.is_odd, "character sum nonzero or parity wrong");
    });
    rec.check("dirichlet", lv + " L(0,chi) = 2h/w", [&] {
      Rational l0 = l_value_at_zero(quadratic_character(n));
      Rational expect = make_rational(2 * oracle::class_number(-n), oracle::unit_count(-n));
      return fail_if(l0 != expect || l0 <= 0 || (n > 3 && l0.get_den() != 1),
                     "L(0,chi) = " + to_string(l0) + ", oracle " + to_string(expect));
    });
    rec.check("eisenstein", lv + " weight-1 series", [&] {
      auto chi = quadratic_character(n);
      auto g = weight1_eisenstein(chi, 60).expansion;
      if (g[0] != l_value_at_zero(chi) / 2 || g[1] != 1) return std::string("constant or linear term wrong");
      for (long a = 1; a < 60; ++a) {
        long d = static_cast<long>(divisors(a).size());
        if (g[static_cast<int>(a)] < 0 || g[static_cast<int>(a)] > d) return "a_" + std::to_string(a) + " outside [0, d(n)]";
        for (long b = 1; a * b < 60; ++b)
          if (std::gcd(a, b) == 1 && g[static_cast<int>(a * b)] != g[static_cast<int>(a)] * g[static_cast<int>(b)])
            return "not multiplicative at " + std::to_string(a) + "*" + std::to_string(b);
      }
      return std::string();
    });
  }

  for (long n = 2; n <= n_max; ++n) {
    if (!is_prime(n)) continue;
    const std::string lv = "N=" + std::to_string(n);
    rec.check("modsym", lv + " Hecke algebra identities", [&] {
      ModularSymbolSpace s0(n, 0);
      QMatrix star = s0.star_matrix();
      if (star * star != QMatrix::identity(s0.dimension())) return std::string("star^2 != 1");
      std::vector<long> ells;
      for (long l : {2L, 3L, 5L, 7L, 11L, 13L})
        if (l != n) ells.push_back(l);
      std::vector<QMatrix> t;
      for (long l : ells) t.push_back(s0.hecke_matrix(l));
      for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] * star != star * t[i]) return "star does not commute with T" + std::to_string(ells[i]);
        for (size_t j = i + 1; j < t.size(); ++j)
          if (t[i] * t[j] != t[j] * t[i])
            return "T" + std::to_string(ells[i]) + " and T" + std::to_string(ells[j]) + " do not commute";
      }
      ModularSymbolSpace sp(n, 1);
      if (static_cast<long>(sp.cuspidal_dimension()) != oracle::genus_x0(n))
        return "plus-cuspidal dimension " + std::to_string(sp.cuspidal_dimension()) + " != genus " +
               std::to_string(oracle::genus_x0(n));
      if (s0.cuspidal_dimension() != 2 * sp.cuspidal_dimension()) return std::string("sign-0 cuspidal dimension mismatch");
      return std::string();
    });
    rec.check("modsym", lv + " eigenforms: Ramanujan bound and traces", [&] {
      ModularSymbolSpace sp(n, 1);
      auto forms = newform_decomposition(sp, 50);
      for (long ell : primes_up_to(50)) {
        if (ell == n) continue;
        Rational tr = 0;
        for (const auto& f : forms) {
          const NFElem& a = f.eigenvalue(ell);
          tr += a.trace();
          // every real root of charpoly(a^2) is at most 4*ell
          SturmChain sc((a * a).charpoly());
          if (sc.count_above(Rational(4 * ell)) != 0) return f.label + " violates |a_" + std::to_string(ell) + "| <= 2 sqrt(ell)";
        }
        if (sp.cuspidal_dimension() > 0) {
          QMatrix t = sp.hecke_operator(ell);
          Rational expect = 0;
          for (size_t i = 0; i < t.rows(); ++i) expect += t(i, i);
          if (tr != expect) return "trace of T" + std::to_string(ell) + " mismatch";
        }
      }
      return std::string();
    });
  }

  for (long n = 3; n <= n_max; ++n) {
    if (!is_prime(n) || n % 4 != 3) continue;
    const std::string lv = "N=" + std::to_string(n);
    DecompositionResult d;
    bool have = false;
    rec.check("rankin", lv + " decomposition residual", [&] {
      d = decompose(n);
      have = true;
      return fail_if(d.residual_checked_to < 2 * sturm_bound(n), "residual not checked to 2*sturm");
    });
    if (!have) continue;
    rec.check("rankin", lv + " key equality", [&] {
      auto k = key_equality_check(d);
      return fail_if(!k.pass, "difference " + to_string(k.difference));
    });
    BoundReport b;
    rec.check("rankin", lv + " Guo nonnegativity and size bound", [&] {
      b = verify_bounds(d);
      return fail_if(!b.all_pass(), "a certified bound check failed");
    });
    rec.check(
        "rankin", lv + " size bound for 8*Lambda",
        [&] {
          std::string bad;
          for (const auto& f : b.forms)
            if (!f.below_bound_times8) bad += (bad.empty() ? "" : ", ") + f.label;
          return bad.empty() ? bad : "exceeds the bound: " + bad;
        },
        true);
  }

  if (n_max >= 11) {
    rec.check("golden", "N=11 expansions and decomposition", [&] {
      auto g = weight1_eisenstein(quadratic_character(11), 6).expansion;
      auto e = weight2_eisenstein(11, 6).expansion;
      auto forms = newform_decomposition(build_space(11, 1));
      if (to_string(g) != "1/2 + q + 2*q^3 + q^4 + 2*q^5 + O(q^6)") return "G = " + to_string(g);
      if (to_string(e) != "5/12 + q + 3*q^2 + 4*q^3 + 7*q^4 + 6*q^5 + O(q^6)") return "E = " + to_string(e);
      if (forms.size() != 1) return std::string("expected one newform");
      auto f = eigenform_qexp(forms[0], 6);
      const long want[] = {0, 1, -2, -1, 2, 1};
      for (int k = 0; k < 6; ++k)
        if (f[k] != want[k]) return "a_" + std::to_string(k) + " = " + f[k].to_string();
      auto d = decompose(11, forms);
      return fail_if(d.eisenstein_coefficient != Rational(3, 5) || d.newforms[0].lambda.rational_value() != Rational(2, 5),
                     "c or Lambda wrong");
    });
  }
  return rep;
}

}  // namespace rankiw
