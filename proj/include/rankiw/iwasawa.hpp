#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankiw/core/certified.hpp"
#include "rankiw/modsym/newforms.hpp"

namespace rankiw {

inline constexpr long kDefaultHeckeCap = 1000;

/// An elliptic curve of prime conductor, seen through its rational newform.
struct CurveInput {
  Eigenform form;
  std::optional<Integer> modular_degree;  // external input
  std::string provenance = "user supplied";
  // Prime level is semistable, so c_E = 1 is assumed and recorded.
  bool manin_constant_one = true;
};

enum class Reduction { good_ordinary, good_supersingular, bad };

inline std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::good_ordinary: return "good ordinary";
    case Reduction::good_supersingular: return "good supersingular";
    case Reduction::bad: return "bad";
  }
  return "?";
}

struct ReductionData {
  Reduction type = Reduction::bad;
  std::optional<Integer> a_p;
  bool anomalous = false;
};

inline ReductionData reduction_data(const Eigenform& f, long p) {
  require_domain(f.is_rational(), "reduction data needs a rational eigenform");
  require_domain(is_prime(p), "p must be prime");
  ReductionData r;
  if (p == f.level) return r;
  Rational ap = f.eigenvalue(p).rational_value();
  require_internal(ap.get_den() == 1, "non-integral Hecke eigenvalue");
  Integer a = ap.get_num();
  r.a_p = a;
  r.type = divides(Integer(p), a) ? Reduction::good_supersingular : Reduction::good_ordinary;
  r.anomalous = mod(a, Integer(p)) == mod(Integer(1), Integer(p));
  return r;
}

inline CertifiedReal theorem1_bound(long n, const Integer& modular_degree) {
  require_domain(is_prime(n), "level must be prime");
  return theorem1_bound_value(n, modular_degree);
}

enum class LedgerStatus { satisfied, external_check_needed, failed };

inline std::string to_string(LedgerStatus s) {
  switch (s) {
    case LedgerStatus::satisfied: return "satisfied";
    case LedgerStatus::external_check_needed: return "external_check_needed";
    case LedgerStatus::failed: return "failed";
  }
  return "?";
}

struct LedgerEntry {
  std::string name;
  LedgerStatus status;
  std::string note;
};

enum class Conclusion { mu_lambda_zero, inconclusive };

struct PrimeVerdict {
  long p = 0;
  Reduction reduction = Reduction::bad;
  std::optional<Integer> a_p;
  bool anomalous = false;
  std::optional<int> vp_numerator;    // absent when Lambda = 0
  int vp_denominator = 0;
  std::vector<LedgerEntry> ledger;
  Conclusion conclusion = Conclusion::inconclusive;
  bool conditional = false;           // positive, but some hypothesis needs an external check
  std::vector<std::string> reasons;   // why inconclusive
  std::vector<std::string> corollaries;

  bool positive() const { return conclusion == Conclusion::mu_lambda_zero; }
};

struct IwasawaCertificate {
  std::string label;
  long level = 0;
  std::optional<Integer> modular_degree;
  std::string provenance;
  Rational lambda;
  std::optional<CertifiedReal> theorem1_bound;
  long p_max = 0;
  std::vector<PrimeVerdict> verdicts;
};

inline PrimeVerdict certify(const CurveInput& curve, long p, const std::optional<Rational>& lambda) {
  require_domain(is_prime(p), "p must be prime");
  require_domain(p % 2 == 1, "p must be odd");
  if (!lambda) throw DomainError("missing Lambda_f: run the Rankin decomposition first");
  const Eigenform& f = curve.form;

  PrimeVerdict v;
  v.p = p;
  ReductionData rd = reduction_data(f, p);
  v.reduction = rd.type;
  v.a_p = rd.a_p;
  v.anomalous = rd.anomalous;
  const Integer pz(p);
  if (*lambda != 0) v.vp_numerator = valuation(lambda->get_num(), pz);
  v.vp_denominator = valuation(Integer(lambda->get_den()), pz);

  auto add = [&](std::string name, LedgerStatus s, std::string note) {
    v.ledger.push_back({std::move(name), s, std::move(note)});
  };
  add("p_odd", LedgerStatus::satisfied, "");
  add("kato_p_ge_5", p >= 5 ? LedgerStatus::satisfied : LedgerStatus::external_check_needed,
      p >= 5 ? "" : "p = 3 lies outside the stated range of the divisibility theorem");
  add("surjective_mod_p", p >= 11 ? LedgerStatus::satisfied : LedgerStatus::external_check_needed,
      p >= 11 ? "semistable curve, p >= 11" : "mod-p surjectivity must be checked separately for p < 11");
  add("manin_constant_one", curve.manin_constant_one ? LedgerStatus::satisfied : LedgerStatus::failed,
      "assumed: prime level is semistable");
  if (curve.modular_degree)
    add("p_not_dividing_m_E", divides(pz, *curve.modular_degree) ? LedgerStatus::failed : LedgerStatus::satisfied,
        "m_E = " + curve.modular_degree->get_str() + " (" + curve.provenance + ")");
  else
    add("p_not_dividing_m_E", LedgerStatus::external_check_needed, "modular degree not supplied");
  add("no_torsion_cancellation", p > 7 ? LedgerStatus::satisfied : LedgerStatus::external_check_needed,
      p > 7 ? "" : "p could divide a torsion denominator of one L-value factor");

  if (rd.type == Reduction::bad) v.reasons.push_back("bad reduction");
  if (rd.type == Reduction::good_supersingular) v.reasons.push_back("supersingular (a_p = 0 mod p)");
  if (rd.anomalous) v.reasons.push_back("anomalous (a_p = 1 mod p)");
  if (*lambda == 0) v.reasons.push_back("Lambda_f = 0");
  if (v.vp_numerator && *v.vp_numerator > 0)
    v.reasons.push_back("v_p(numerator of Lambda_f) = " + std::to_string(*v.vp_numerator));
  if (v.vp_denominator > 0) v.reasons.push_back("v_p(denominator of Lambda_f) = " + std::to_string(v.vp_denominator));
  for (const auto& e : v.ledger)
    if (e.status == LedgerStatus::failed) v.reasons.push_back("hypothesis failed: " + e.name);

  if (v.reasons.empty()) {
    v.conclusion = Conclusion::mu_lambda_zero;
    for (const auto& e : v.ledger)
      if (e.status == LedgerStatus::external_check_needed) v.conditional = true;
    v.corollaries = {"rank E(Q_n) = 0 for every layer n", "Sha(E/Q_n)[p^inf] = 0 for every layer n"};
  }
  return v;
}

inline IwasawaCertificate prime_scan(const CurveInput& curve, const Rational& lambda, long p_max,
                                     long cap = kDefaultHeckeCap) {
  const Eigenform& f = curve.form;
  require_domain(f.is_rational(), "prime scan needs a rational eigenform");
  if (p_max > cap) throw CapError("p_max " + std::to_string(p_max) + " exceeds the Hecke cap " + std::to_string(cap));
  if (p_max > f.hecke_bound)
    throw CapError("p_max " + std::to_string(p_max) + " exceeds the computed Hecke bound " + std::to_string(f.hecke_bound));
  IwasawaCertificate c;
  c.label = f.label;
  c.level = f.level;
  c.modular_degree = curve.modular_degree;
  c.provenance = curve.provenance;
  c.lambda = lambda;
  if (curve.modular_degree) c.theorem1_bound = theorem1_bound(f.level, *curve.modular_degree);
  c.p_max = p_max;
  for (long p : primes_up_to(p_max)) {
    if (p == 2) continue;
    c.verdicts.push_back(certify(curve, p, lambda));
  }
  return c;
}

}  // namespace rankiw
