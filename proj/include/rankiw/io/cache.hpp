#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rankiw/io/json.hpp"

namespace rankiw {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheEnvVar = "RANKIW_CACHE_DIR";

class CacheSchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Flag beats environment beats the default.
inline std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  return std::filesystem::path(".cache") / "eigenforms";
}

inline Json eigenforms_to_cache_json(long level, const std::vector<Eigenform>& forms, long hecke_bound) {
  Json j;
  j["format_version"] = kCacheFormatVersion;
  j["level"] = level;
  j["hecke_bound"] = hecke_bound;
  Json orbits = Json::array();
  for (const auto& f : forms) {
    Json o;
    o["label"] = f.label;
    o["minpoly"] = to_json(f.field.minpoly());
    o["var"] = f.field.var();
    Json ev;
    for (const auto& [ell, a] : f.eigenvalues) {
      Json coords = Json::array();
      for (const auto& c : a.coords()) coords.push_back(to_string(c));
      ev[std::to_string(ell)] = coords;
    }
    o["eigenvalues"] = ev;
    orbits.push_back(o);
  }
  j["orbits"] = orbits;
  return j;
}

inline std::vector<Eigenform> eigenforms_from_cache_json(const Json& j) {
  if (!j.contains("format_version") || j["format_version"] != kCacheFormatVersion)
    throw CacheSchemaError("eigenform cache has an unsupported format version");
  try {
    const long level = j.at("level").get<long>();
    const long bound = j.at("hecke_bound").get<long>();
    std::vector<Eigenform> out;
    for (const auto& o : j.at("orbits")) {
      std::vector<Rational> mp;
      for (const auto& c : o.at("minpoly")) mp.push_back(parse_rational(c.get<std::string>()));
      Eigenform f;
      f.level = level;
      f.hecke_bound = bound;
      f.label = o.at("label").get<std::string>();
      f.field = NumberField(UniPoly(mp), o.at("var").get<std::string>());
      for (const auto& [key, coords] : o.at("eigenvalues").items()) {
        std::vector<Rational> c;
        for (const auto& x : coords) c.push_back(parse_rational(x.get<std::string>()));
        f.eigenvalues.emplace(std::stol(key), NFElem(f.field, std::move(c)));
      }
      out.push_back(std::move(f));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw CacheSchemaError(std::string("malformed eigenform cache: ") + e.what());
  }
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, long level) {
  return dir / ("level_" + std::to_string(level) + ".json");
}

// nullopt when absent or computed to a smaller bound; throws CacheSchemaError on a bad file.
inline std::optional<std::vector<Eigenform>> load_eigenforms(const std::filesystem::path& dir, long level,
                                                             long hecke_bound) {
  auto path = cache_file(dir, level);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheSchemaError("unreadable eigenform cache " + path.string() + ": " + e.what());
  }
  if (j.value("level", -1L) != level) throw CacheSchemaError("eigenform cache level mismatch in " + path.string());
  auto forms = eigenforms_from_cache_json(j);
  if (j.at("hecke_bound").get<long>() < hecke_bound) return std::nullopt;
  // Drop eigenvalues beyond the request so cold and warm runs agree exactly.
  for (auto& f : forms) {
    f.hecke_bound = hecke_bound;
    for (auto it = f.eigenvalues.begin(); it != f.eigenvalues.end();)
      it = it->first > hecke_bound ? f.eigenvalues.erase(it) : std::next(it);
  }
  return forms;
}

inline void save_eigenforms(const std::filesystem::path& dir, long level, const std::vector<Eigenform>& forms,
                            long hecke_bound) {
  std::filesystem::create_directories(dir);
  auto path = cache_file(dir, level);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw DomainError("cannot write eigenform cache " + tmp.string());
    out << eigenforms_to_cache_json(level, forms, hecke_bound).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rankiw
