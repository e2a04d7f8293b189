#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "rankiw/rankiw.hpp"

using namespace rankiw;

namespace {

enum Exit { kOk = 0, kDomain = 2, kInternal = 3 };

struct Common {
  std::string out = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool timing = false;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

// Eigenforms through the on-disk cache; a bad cache file is reported and recomputed.
std::vector<Eigenform> eigenforms(long n, long hecke_bound, const Common& opt) {
  if (hecke_bound == 0) hecke_bound = std::max<long>(50, n);
  if (!opt.no_cache) {
    auto dir = resolve_cache_dir(opt.cache_dir);
    try {
      if (auto hit = load_eigenforms(dir, n, hecke_bound)) return *hit;
    } catch (const CacheSchemaError& e) {
      warn(std::string(e.what()) + "; recomputing");
    }
    auto forms = newform_decomposition(build_space(n, 1), hecke_bound);
    try {
      save_eigenforms(dir, n, forms, hecke_bound);
    } catch (const std::exception& e) {
      warn(std::string("could not write eigenform cache: ") + e.what());
    }
    return forms;
  }
  return newform_decomposition(build_space(n, 1), hecke_bound);
}

void emit(const Json& doc, const Common& opt, Clock::time_point t0) {
  Json out = doc;
  if (opt.timing) out["timing_seconds"] = seconds_since(t0);
  std::cout << out.dump(2) << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "NO"; }

void print_decomposition(const DecompositionResult& d, const BoundReport& b) {
  std::cout << "level N = " << d.level << "\n";
  std::cout << "L(0, chi) = " << to_string(d.l0) << "\n";
  std::cout << "c (Eisenstein) = " << to_string(d.eisenstein_coefficient) << "\n";
  if (d.newforms.empty()) std::cout << "no cusp forms at this level\n";
  for (const auto& o : d.newforms) {
    std::cout << "  " << std::left << std::setw(8) << o.form.label << std::right << " field " << o.form.field.minpoly().to_string("x")
              << "\n           Lambda = " << o.lambda.to_string() << "\n";
  }
  std::cout << "solve rows n = 1.." << d.solve_rows << ", residual zero for n = 0.." << d.residual_checked_to << "\n";
  std::cout << "bound sqrt(N)(log N + 5)/(2 pi) in [" << b.ramare_bound.lower_decimal(kBoundDigits) << ", "
            << b.ramare_bound.upper_decimal(kBoundDigits) << "]\n";
  std::cout << "a1 identity c + sum Lambda = L(0, chi): " << yes_no(b.key_equality.pass) << "\n";
  std::cout << "L(0, chi) below bound: " << yes_no(b.l0_below_bound) << "\n";
  for (const auto& f : b.forms)
    std::cout << "  " << f.label << ": 0 <= Lambda " << yes_no(f.nonnegative) << ", Lambda < bound "
              << yes_no(f.below_bound) << ", 8*Lambda < bound " << yes_no(f.below_bound_times8) << "\n";
}

int cmd_decompose(long n, int prec, const Common& opt) {
  auto t0 = Clock::now();
  require_level(n);
  auto forms = eigenforms(n, 0, opt);
  DecompositionResult d = decompose(n, forms, prec);
  BoundReport b = verify_bounds(d);
  if (opt.out == "json") {
    Json in;
    in["N"] = n;
    if (prec) in["prec"] = prec;
    Json doc = report_document("decompose", in);
    doc["decomposition"] = to_json(d);
    doc["bounds"] = to_json(b);
    emit(doc, opt, t0);
  } else {
    print_decomposition(d, b);
    if (opt.timing) std::cout << "time " << seconds_since(t0) << " s\n";
  }
  return kOk;
}

int cmd_eisenstein(long n, int prec, const Common& opt) {
  auto t0 = Clock::now();
  require_level(n);
  if (prec == 0) prec = static_cast<int>(2 * sturm_bound(n) + 10);
  auto chi = quadratic_character(n);
  auto g = weight1_eisenstein(chi, prec);
  auto e = weight2_eisenstein(n, prec);
  auto g2 = rankin_product(n, std::max<int>(prec, static_cast<int>(sturm_bound(n) + 10))).truncate(prec);
  if (opt.out == "json") {
    Json in;
    in["N"] = n;
    in["prec"] = prec;
    Json doc = report_document("eisenstein", in);
    doc["character"] = chi.name();
    doc["L0_chi"] = to_json(l_value_at_zero(chi));
    doc["G"] = to_json(g.expansion);
    doc["E"] = to_json(e.expansion);
    doc["G_squared"] = to_json(g2);
    emit(doc, opt, t0);
  } else {
    std::cout << "chi = " << chi.name() << ", L(0, chi) = " << to_string(l_value_at_zero(chi)) << "\n";
    std::cout << "G   = " << to_string(g.expansion) << "\n";
    std::cout << "E   = " << to_string(e.expansion) << "\n";
    std::cout << "G^2 = " << to_string(g2) << "\n";
  }
  return kOk;
}

int cmd_space(long n, int sign, const Common& opt) {
  auto t0 = Clock::now();
  require_domain(is_prime(n), "level must be prime");
  require_domain(sign == 0 || sign == 1 || sign == -1, "sign must be -1, 0 or 1");
  ModularSymbolSpace s(n, sign);
  std::vector<Eigenform> forms;
  if (sign == 1) forms = eigenforms(n, 0, opt);
  std::vector<std::pair<long, UniPoly>> charpolys;
  for (long ell : {2L, 3L, 5L})
    if (ell != n && s.cuspidal_dimension() > 0) charpolys.emplace_back(ell, charpoly(s.hecke_operator(ell)));
  if (opt.out == "json") {
    Json in;
    in["N"] = n;
    in["sign"] = sign;
    Json doc = report_document("space", in);
    doc["dimension"] = s.dimension();
    doc["cuspidal_dimension"] = s.cuspidal_dimension();
    Json cp;
    for (const auto& [ell, f] : charpolys) cp[std::to_string(ell)] = f.to_string("x");
    doc["hecke_charpolys"] = cp;
    Json fs = Json::array();
    for (const auto& f : forms) fs.push_back(eigenform_summary(f));
    doc["newforms"] = fs;
    emit(doc, opt, t0);
  } else {
    std::cout << "modular symbols of level " << n << ", sign " << sign << ": dimension " << s.dimension()
              << ", cuspidal " << s.cuspidal_dimension() << "\n";
    for (const auto& [ell, f] : charpolys) std::cout << "charpoly T" << ell << " = " << f.to_string("x") << "\n";
    for (const auto& f : forms) {
      std::cout << "  " << f.label << "  field " << f.field.minpoly().to_string("x") << "\n   ";
      for (const auto& [ell, a] : f.eigenvalues) {
        if (ell > 13) break;
        std::cout << " a" << ell << "=" << a.to_string();
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_certify(long n, const std::optional<std::string>& mdeg, const std::string& provenance, long p_max,
                const std::string& label, const Common& opt) {
  auto t0 = Clock::now();
  require_level(n);
  require_domain(p_max >= 3, "p-max must be at least 3");
  if (p_max > kDefaultHeckeCap)
    throw CapError("p-max " + std::to_string(p_max) + " exceeds the Hecke cap " + std::to_string(kDefaultHeckeCap));
  auto forms = eigenforms(n, std::max<long>({50, n, p_max}), opt);
  DecompositionResult d = decompose(n, forms);

  std::vector<const OrbitCoefficient*> rational;
  for (const auto& o : d.newforms)
    if (o.form.is_rational() && (label.empty() || o.form.label == label)) rational.push_back(&o);
  if (rational.empty())
    throw DomainError(label.empty() ? "no elliptic-curve form at this level" : "no rational newform labelled " + label);

  std::optional<Integer> me;
  if (mdeg) {
    Integer m;
    if (m.set_str(*mdeg, 10) != 0 || m < 1) throw DomainError("modular degree must be a positive integer");
    me = m;
    if (rational.size() > 1) throw DomainError("several rational newforms at this level; choose one with --label");
  } else {
    warn("no --modular-degree given: denominator checks are skipped and no bound is reported");
  }

  std::map<std::string, Integer> degrees;
  if (me) degrees[rational.front()->form.label] = *me;
  BoundReport b = verify_bounds(d, degrees);

  std::vector<IwasawaCertificate> certs;
  for (const auto* o : rational) {
    CurveInput curve{o->form, me, me ? provenance : std::string("not supplied"), true};
    certs.push_back(prime_scan(curve, o->lambda.rational_value(), p_max));
  }

  if (opt.out == "json") {
    Json in;
    in["N"] = n;
    in["modular_degree"] = me ? Json(me->get_str()) : Json(nullptr);
    in["p_max"] = p_max;
    Json doc = report_document("certify", in);
    doc["decomposition"] = to_json(d);
    doc["bounds"] = to_json(b);
    Json cs = Json::array();
    for (const auto& c : certs) cs.push_back(to_json(c));
    doc["certificates"] = cs;
    emit(doc, opt, t0);
    return kOk;
  }
  print_decomposition(d, b);
  for (const auto& c : certs) {
    std::cout << "\ncurve " << c.label << ", Lambda = " << to_string(c.lambda);
    if (c.modular_degree) std::cout << ", m_E = " << c.modular_degree->get_str() << " (" << c.provenance << ")";
    std::cout << "\n";
    if (c.theorem1_bound)
      std::cout << "100 sqrt(N)(log N + 5) m_E in [" << c.theorem1_bound->lower_decimal(kBoundDigits) << ", "
                << c.theorem1_bound->upper_decimal(kBoundDigits) << "]\n";
    for (const auto& v : c.verdicts) {
      std::cout << "  p=" << std::right << std::setw(4) << v.p << "  " << std::setw(20) << std::left << to_string(v.reduction)
                << std::right;
      if (v.positive())
        std::cout << "mu = lambda = 0" << (v.conditional ? " (conditional)" : "");
      else {
        std::cout << "inconclusive:";
        for (const auto& r : v.reasons) std::cout << " " << r << ";";
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_scan(long n_min, long n_max, const Common& opt) {
  auto t0 = Clock::now();
  require_domain(n_min <= n_max, "empty level range");
  Json rows = Json::array();
  if (opt.out != "json")
    std::cout << std::setw(5) << "N" << std::setw(6) << "L0" << std::setw(12) << "c" << std::setw(8) << "forms"
              << std::setw(6) << "a1" << std::setw(8) << "bound" << std::setw(8) << "8*L" << "\n";
  for (long n = std::max<long>(n_min, 3); n <= n_max; ++n) {
    if (!is_prime(n) || n % 4 != 3) continue;
    DecompositionResult d = decompose(n, eigenforms(n, 0, opt));
    BoundReport b = verify_bounds(d);
    if (opt.out == "json") {
      Json r;
      r["N"] = n;
      r["L0_chi"] = to_json(d.l0);
      r["eisenstein_coefficient"] = to_json(d.eisenstein_coefficient);
      Json lam = Json::array();
      for (const auto& o : d.newforms) {
        Json x;
        x["label"] = o.form.label;
        x["field"] = o.form.field.minpoly().to_string("x");
        x["lambda"] = to_json(o.lambda);
        lam.push_back(x);
      }
      r["newforms"] = lam;
      r["key_equality"] = b.key_equality.pass;
      r["all_pass"] = b.all_pass();
      r["times_8_reading_pass"] = b.times8_pass();
      rows.push_back(r);
    } else {
      std::cout << std::setw(5) << n << std::setw(6) << to_string(d.l0) << std::setw(12)
                << to_string(d.eisenstein_coefficient) << std::setw(8) << d.newforms.size() << std::setw(6)
                << yes_no(b.key_equality.pass) << std::setw(8) << yes_no(b.all_pass()) << std::setw(8)
                << yes_no(b.times8_pass()) << "\n";
    }
  }
  if (opt.out == "json") {
    Json in;
    in["n_min"] = n_min;
    in["n_max"] = n_max;
    Json doc = report_document("scan", in);
    doc["levels"] = rows;
    emit(doc, opt, t0);
  }
  return kOk;
}

int cmd_selftest(long n_max, const Common& opt) {
  auto t0 = Clock::now();
  SelftestReport r = run_selftest(n_max);
  if (opt.out == "json") {
    Json in;
    in["n_max"] = n_max;
    Json doc = report_document("selftest", in);
    Json cs = Json::array();
    for (const auto& c : r.checks) {
      Json x;
      x["suite"] = c.suite;
      x["name"] = c.name;
      x["pass"] = c.pass;
      if (c.informational) x["informational"] = true;
      if (!c.detail.empty()) x["detail"] = c.detail;
      cs.push_back(x);
    }
    doc["checks"] = cs;
    doc["pass"] = r.pass();
    emit(doc, opt, t0);
  } else {
    for (const auto& c : r.checks) {
      const char* tag = c.pass ? "ok  " : (c.informational ? "note" : "FAIL");
      std::cout << tag << "  [" << c.suite << "] " << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << r.checks.size() << " checks, " << r.failures() << " failed";
    if (opt.timing) std::cout << ", " << seconds_since(t0) << " s";
    std::cout << "\n";
  }
  return r.pass() ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rankin decomposition of G^2 and Iwasawa certificates at prime level N = 3 mod 4"};
  app.require_subcommand(1);
  Common opt;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", opt.cache_dir, std::string("eigenform cache directory (env ") + kCacheEnvVar + ")");
    sub->add_flag("--no-cache", opt.no_cache, "neither read nor write the eigenform cache");
    sub->add_flag("--timing", opt.timing, "report wall time");
  };

  long n = 0;
  int prec = 0;
  int sign = 1;
  long p_max = 100;
  long n_min = 3, n_max = 120;
  std::optional<std::string> mdeg;
  std::string provenance = "user supplied";
  std::string label;

  auto* dec = app.add_subcommand("decompose", "exact Rankin decomposition of G^2 with bound checks");
  dec->add_option("N", n, "prime level N = 3 mod 4")->required();
  dec->add_option("--prec", prec, "q-expansion precision (at least 2*sturm(N) + 1)");
  common(dec);

  auto* eis = app.add_subcommand("eisenstein", "weight-1 and weight-2 Eisenstein series and G^2");
  eis->add_option("N", n, "prime level N = 3 mod 4")->required();
  eis->add_option("--prec", prec, "number of coefficients");
  common(eis);

  auto* spc = app.add_subcommand("space", "modular symbols, Hecke charpolys and newforms");
  spc->add_option("N", n, "prime level")->required();
  spc->add_option("--sign", sign, "sign quotient: 1, -1 or 0");
  common(spc);

  auto* cer = app.add_subcommand("certify", "per-prime mu = lambda = 0 certificates for a rational newform");
  cer->add_option("N", n, "prime level N = 3 mod 4")->required();
  cer->add_option("--modular-degree", mdeg, "modular degree m_E of the optimal curve");
  cer->add_option("--provenance", provenance, "where the modular degree came from");
  cer->add_option("--p-max", p_max, "largest prime to certify");
  cer->add_option("--label", label, "newform label when several are rational");
  common(cer);

  auto* scn = app.add_subcommand("scan", "decomposition summary over a range of levels");
  scn->add_option("--n-min", n_min, "smallest level");
  scn->add_option("--n-max", n_max, "largest level");
  common(scn);

  auto* st = app.add_subcommand("selftest", "property suites over all levels up to n-max");
  st->add_option("--n-max", n_max, "largest level");
  common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (*dec) return cmd_decompose(n, prec, opt);
    if (*eis) return cmd_eisenstein(n, prec, opt);
    if (*spc) return cmd_space(n, sign, opt);
    if (*cer) return cmd_certify(n, mdeg, provenance, p_max, label, opt);
    if (*scn) return cmd_scan(n_min, n_max, opt);
    if (*st) return cmd_selftest(n_max, opt);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
