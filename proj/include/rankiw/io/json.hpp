#pragma once

#include <json.hpp>

#include <string>

#include "rankiw/iwasawa.hpp"
#include "rankiw/rankin.hpp"

namespace rankiw {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kBoundDigits = 6;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const UniPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

inline Json to_json(const NFElem& a) {
  Json j;
  j["field"] = a.field().minpoly().to_string("x");
  Json coords = Json::array();
  for (const auto& c : a.coords()) coords.push_back(to_string(c));
  j["coords"] = coords;
  j["display"] = a.to_string();
  return j;
}

inline Json to_json(const CertifiedReal& x) {
  Json j;
  j["lower"] = x.lower_decimal(kBoundDigits);
  j["upper"] = x.upper_decimal(kBoundDigits);
  j["rounding"] = "outward";
  j["precision_bits"] = x.precision_bits;
  return j;
}

inline Json to_json(const RationalSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_string(c));
  return a;
}

inline Json eigenform_summary(const Eigenform& f, long max_ell = 13) {
  Json j;
  j["label"] = f.label;
  j["field"] = f.field.minpoly().to_string("x");
  j["field_generator"] = f.field.var();
  j["rational"] = f.is_rational();
  Json ev;
  for (const auto& [ell, a] : f.eigenvalues) {
    if (ell > max_ell) break;
    ev[std::to_string(ell)] = a.to_string();
  }
  j["eigenvalues"] = ev;
  return j;
}

inline Json to_json(const DecompositionResult& d) {
  Json j;
  j["level"] = d.level;
  j["L0_chi"] = to_json(d.l0);
  j["eisenstein_coefficient"] = to_json(d.eisenstein_coefficient);
  Json forms = Json::array();
  for (const auto& o : d.newforms) {
    Json f = eigenform_summary(o.form);
    f["lambda"] = to_json(o.lambda);
    f["lambda_charpoly"] = o.lambda.charpoly().to_string("x");
    // The same coefficient under the g/(8 pi^2 i) reading of the Rankin identity.
    f["lambda_times_8"] = to_json(Rational(8) * o.lambda);
    forms.push_back(f);
  }
  j["newforms"] = forms;
  j["precision"] = d.precision;
  j["solve_rows"] = d.solve_rows;
  j["residual_checked_to"] = d.residual_checked_to;
  return j;
}

inline Json to_json(const BoundReport& b) {
  Json j;
  j["ramare_bound"] = to_json(b.ramare_bound);
  j["L0_below_bound"] = b.l0_below_bound;
  Json ke;
  ke["pass"] = b.key_equality.pass;
  ke["L0_chi"] = to_json(b.key_equality.l0);
  ke["sum"] = to_json(b.key_equality.sum);
  ke["difference"] = to_json(b.key_equality.difference);
  j["key_equality"] = ke;
  Json forms = Json::array();
  for (const auto& f : b.forms) {
    Json x;
    x["label"] = f.label;
    x["nonnegative"] = f.nonnegative;
    x["below_bound"] = f.below_bound;
    x["below_bound_times_8"] = f.below_bound_times8;
    if (f.denominator) {
      Json dc;
      dc["odd_denominator"] = f.denominator->odd_denominator.get_str();
      dc["skipped"] = f.denominator->skipped;
      if (!f.denominator->skipped) {
        dc["modular_degree"] = f.denominator->modular_degree.get_str();
        dc["pass"] = f.denominator->pass;
        dc["witness_m"] = f.denominator->witness_m;
      }
      x["denominator_check"] = dc;
    }
    forms.push_back(x);
  }
  j["forms"] = forms;
  j["all_pass"] = b.all_pass();
  j["times_8_reading_pass"] = b.times8_pass();
  return j;
}

inline Json to_json(const PrimeVerdict& v) {
  Json j;
  j["p"] = v.p;
  j["reduction"] = to_string(v.reduction);
  if (v.a_p) j["a_p"] = v.a_p->get_str();
  j["anomalous"] = v.anomalous;
  if (v.vp_numerator) j["vp_numerator"] = *v.vp_numerator;
  j["vp_denominator"] = v.vp_denominator;
  j["conclusion"] = v.positive() ? "mu=lambda=0" : "inconclusive";
  j["conditional"] = v.conditional;
  Json reasons = Json::array();
  for (const auto& r : v.reasons) reasons.push_back(r);
  j["reasons"] = reasons;
  Json ledger = Json::array();
  for (const auto& e : v.ledger) {
    Json x;
    x["hypothesis"] = e.name;
    x["status"] = to_string(e.status);
    if (!e.note.empty()) x["note"] = e.note;
    ledger.push_back(x);
  }
  j["ledger"] = ledger;
  if (!v.corollaries.empty()) {
    Json c = Json::array();
    for (const auto& s : v.corollaries) c.push_back(s);
    j["corollaries"] = c;
  }
  return j;
}

inline Json to_json(const IwasawaCertificate& c) {
  Json j;
  j["curve"] = c.label;
  j["level"] = c.level;
  if (c.modular_degree) {
    j["modular_degree"] = c.modular_degree->get_str();
    j["modular_degree_provenance"] = c.provenance;
  } else {
    j["modular_degree"] = nullptr;
  }
  j["manin_constant"] = "1 (assumed, semistable)";
  j["lambda"] = to_json(c.lambda);
  if (c.theorem1_bound) j["theorem1_bound"] = to_json(*c.theorem1_bound);
  j["p_max"] = c.p_max;
  Json vs = Json::array();
  for (const auto& v : c.verdicts) vs.push_back(to_json(v));
  j["verdicts"] = vs;
  return j;
}

// Top-level document wrapper with the schema tag.
inline Json report_document(const std::string& command, Json inputs) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = "rankiw";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

}  // namespace rankiw
