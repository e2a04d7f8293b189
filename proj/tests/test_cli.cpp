#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rankiw/io/cache.hpp"

using namespace rankiw;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  std::string cmd = std::string(RANKIW_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("rankiw_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST(Json, RoundTripIsByteIdentical) {
  auto d = decompose(67);
  Json doc = report_document("decompose", Json{{"N", 67}});
  doc["decomposition"] = to_json(d);
  doc["bounds"] = to_json(verify_bounds(d));
  std::string once = doc.dump(2);
  std::string twice = Json::parse(once).dump(2);
  EXPECT_EQ(once, twice);
  EXPECT_EQ(doc["schema"], 1);
}

TEST(Json, ExactValuesAreStrings) {
  auto d = decompose(67);
  Json j = to_json(d);
  EXPECT_EQ(j["eisenstein_coefficient"], "1/11");
  EXPECT_EQ(j["newforms"][1]["field"], "x^2 - x - 1");
  EXPECT_EQ(j["newforms"][1]["lambda"]["coords"], (Json{"12/55", "4/55"}));
  Json b = to_json(theorem1_bound(11, Integer(1)));
  EXPECT_EQ(b["rounding"], "outward");
  EXPECT_TRUE(b["lower"].is_string());
}

TEST(Cache, ReloadEqualsRecompute) {
  auto dir = fresh_dir("cache");
  for (long n : {11L, 67L, 131L}) {
    auto fresh = newform_decomposition(build_space(n, 1), 60);
    save_eigenforms(dir, n, fresh, 60);
    auto warm = load_eigenforms(dir, n, 60);
    ASSERT_TRUE(warm);
    ASSERT_EQ(warm->size(), fresh.size());
    for (size_t i = 0; i < fresh.size(); ++i) {
      EXPECT_EQ((*warm)[i].label, fresh[i].label);
      EXPECT_EQ((*warm)[i].field.minpoly(), fresh[i].field.minpoly());
      EXPECT_EQ((*warm)[i].eigenvalues, fresh[i].eigenvalues);
    }
    if (n % 4 == 3) {
      auto a = to_json(decompose(n, fresh)).dump();
      auto b = to_json(decompose(n, *warm)).dump();
      EXPECT_EQ(a, b);
    }
    EXPECT_FALSE(load_eigenforms(dir, n, 100));  // cached bound too small
    auto trimmed = load_eigenforms(dir, n, 30);
    ASSERT_TRUE(trimmed);
    EXPECT_EQ(trimmed->front().eigenvalues.rbegin()->first, 29);
  }
  EXPECT_FALSE(load_eigenforms(dir, 19, 50));
  fs::remove_all(dir);
}

TEST(Cache, SchemaMismatchRejected) {
  auto dir = fresh_dir("schema");
  auto forms = newform_decomposition(build_space(11, 1));
  Json j = eigenforms_to_cache_json(11, forms, 50);
  j["format_version"] = 99;
  std::ofstream(cache_file(dir, 11)) << j.dump();
  EXPECT_THROW(load_eigenforms(dir, 11, 50), CacheSchemaError);
  std::ofstream(cache_file(dir, 11)) << "{not json";
  EXPECT_THROW(load_eigenforms(dir, 11, 50), CacheSchemaError);
  fs::remove_all(dir);
}

TEST(Cache, DirectoryResolution) {
  EXPECT_EQ(resolve_cache_dir("/x/y"), fs::path("/x/y"));
  ::setenv(kCacheEnvVar, "/from/env", 1);
  EXPECT_EQ(resolve_cache_dir(""), fs::path("/from/env"));
  EXPECT_EQ(resolve_cache_dir("/flag"), fs::path("/flag"));
  ::unsetenv(kCacheEnvVar);
  EXPECT_EQ(resolve_cache_dir(""), fs::path(".cache") / "eigenforms");
}

TEST(Cli, DecomposeText) {
  auto dir = fresh_dir("cli_text");
  auto r = run("decompose 11 --cache-dir " + dir.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "c (Eisenstein) = 3/5"));
  EXPECT_TRUE(contains(r.out, "Lambda = 2/5"));
  EXPECT_TRUE(fs::exists(cache_file(dir, 11)));
  fs::remove_all(dir);
}

TEST(Cli, DecomposeJsonWarmEqualsCold) {
  auto dir = fresh_dir("cli_json");
  auto cold = run("decompose 67 --out json --cache-dir " + dir.string());
  auto warm = run("decompose 67 --out json --cache-dir " + dir.string());
  ASSERT_EQ(cold.code, 0) << cold.out;
  EXPECT_EQ(cold.out, warm.out);
  Json j = Json::parse(cold.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["decomposition"]["newforms"][1]["field"], "x^2 - x - 1");
  fs::remove_all(dir);
}

TEST(Cli, CorruptCacheWarnsAndRecomputes) {
  auto dir = fresh_dir("cli_corrupt");
  std::ofstream(cache_file(dir, 11)) << R"({"format_version": 0})";
  auto r = run("decompose 11 --cache-dir " + dir.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "warning:"));
  EXPECT_TRUE(contains(r.out, "3/5"));
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  auto r = run("decompose 12 --no-cache");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "level must be a prime ≡ 3 (mod 4)"));
  EXPECT_EQ(run("decompose --no-cache").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("eisenstein 13").code, 2);
  EXPECT_EQ(run("space 15").code, 2);
  EXPECT_EQ(run("certify 11 --p-max 5000 --no-cache").code, 2);
  EXPECT_EQ(run("scan --n-min 50 --n-max 10 --no-cache").code, 2);
  EXPECT_EQ(run("decompose 11 --prec 3 --no-cache").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CertifyNeedsRationalForm) {
  // Every newform at level 23 has Hecke field Q(sqrt 5).
  auto r = run("certify 23 --no-cache");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "no elliptic-curve form at this level"));
}

TEST(Cli, CertifyElevenA) {
  auto r = run("certify 11 --modular-degree 1 --p-max 100 --out json --no-cache");
  ASSERT_EQ(r.code, 0) << r.out;
  Json j = Json::parse(r.out);
  const Json& c = j["certificates"][0];
  EXPECT_EQ(c["theorem1_bound"]["lower"].get<std::string>().substr(0, 8), "2453.604");
  EXPECT_EQ(c["verdicts"][0]["p"], 3);
  auto again = run("certify 11 --modular-degree 1 --p-max 100 --out json --no-cache");
  EXPECT_EQ(r.out, again.out);
}

TEST(Cli, CertifyWithoutModularDegreeWarns) {
  auto r = run("certify 11 --p-max 20 --no-cache");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "warning: no --modular-degree"));
}

TEST(Cli, CertifySixtySevenBound) {
  auto r = run("certify 67 --modular-degree 5 --p-max 30 --out json --no-cache");
  ASSERT_EQ(r.code, 0) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["certificates"][0]["theorem1_bound"]["lower"].get<std::string>().substr(0, 9), "37671.828");
}

TEST(Cli, OtherCommands) {
  auto e = run("eisenstein 11 --prec 6");
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "G   = 1/2 + q + 2*q^3 + q^4 + 2*q^5 + O(q^6)"));
  auto s = run("space 67 --no-cache");
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(contains(s.out, "cuspidal 5"));
  auto sc = run("scan --n-min 3 --n-max 31 --out json --no-cache");
  EXPECT_EQ(sc.code, 0);
  EXPECT_EQ(Json::parse(sc.out)["levels"].size(), 6u);  // 3, 7, 11, 19, 23, 31
}

TEST(Cli, Selftest) {
  auto r = run("selftest --n-max 11");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "[golden] N=11"));
  auto d = run("selftest --n-max 3");
  EXPECT_EQ(d.code, 0) << d.out;
}
