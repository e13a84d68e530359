#include "yamabe/mu_zero.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "yamabe/constants.hpp"
#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

using nlohmann::json;

std::string pair_key(int v, int w) { return std::to_string(v) + "," + std::to_string(w); }

void validate_gamma(double gamma, const std::string& where) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError(where + ": gamma must lie in (0,1]");
  }
}

}  // namespace

ConstantRegistry::ConstantRegistry(std::vector<GammaInput> entries,
                                   std::vector<std::pair<std::string, NamedConstant>> extras) {
  for (auto& entry : entries) {
    add(std::move(entry));
  }
  for (auto& [key, constant] : extras) {
    add_extra(std::move(key), std::move(constant));
  }
}

void ConstantRegistry::add(GammaInput entry) {
  const auto key = std::make_pair(entry.params.v(), entry.params.w());
  validate_gamma(entry.gamma, "registry entry " + pair_key(key.first, key.second));
  if (entry.source.empty()) {
    throw DomainError("registry entry " + pair_key(key.first, key.second) + " has no source");
  }
  if (!entries_.emplace(key, std::move(entry)).second) {
    throw DomainError("duplicate registry entry " + pair_key(key.first, key.second));
  }
}

void ConstantRegistry::add_extra(std::string key, NamedConstant constant) {
  if (key.empty() || constant.source.empty() || !std::isfinite(constant.value)) {
    throw DomainError("named constant '" + key + "' needs a name, a finite value and a source");
  }
  if (!extras_.emplace(key, std::move(constant)).second) {
    throw DomainError("duplicate named constant " + key);
  }
}

ConstantRegistry ConstantRegistry::defaults() {
  const auto entry = [](int v, int w, double gamma, const char* source) {
    return GammaInput{ModelSpaceParams(v, w), gamma, source};
  };
  return ConstantRegistry(
      {
          entry(2, 2, 0.68, "Petean-Ruiz 2011, Theorem 1.2: mu(R^2 x S^2) >= 0.68 mu(S^4)"),
          entry(2, 3, 0.75, "Petean-Ruiz 2013, Theorem 1.4: mu(R^2 x S^3) >= 0.75 mu(S^5)"),
          entry(2, 7, 0.747, "Petean-Ruiz 2013, Theorem 1.6: mu(R^2 x S^7) >= 0.747 mu(S^9)"),
          entry(2, 8, 0.626, "Petean-Ruiz 2013, Theorem 1.6: mu(R^2 x S^8) >= 0.626 mu(S^10)"),
          entry(3, 2, 0.63, "Petean-Ruiz 2013, Theorem 1.4: mu(R^3 x S^2) >= 0.63 mu(S^5)"),
          entry(4, 2, 0.56885, "product formula (w = 2, v >= 4), evaluated for (4,2)"),
      },
      {
          {std::string(keys::kMinLambda9),
           {109.4, "uniform product-formula estimate: min(Lambda_9,2 .. Lambda_9,5) > 109.4"}},
          {std::string(keys::kMinLambda10),
           {126.4, "uniform product-formula estimate: min(Lambda_10,2 .. Lambda_10,6) > 126.4"}},
          {std::string(keys::kS1Lower),
           {138.57, "Petean 2009, Theorem 1.2: s_1 >= mu(HP^2 x R) >= 0.9370 mu(S^9)"}},
          {std::string(keys::kS2Lower),
           {97.3, "Petean-Ruiz 2013, example after Theorem 1.7: s_2 >= 0.59 mu(S^10) > 97.3"}},
          {std::string(keys::kT7),
           {74.5, "published lower bound for 2-connected 7-manifolds with vanishing index"}},
          {std::string(keys::kT8),
           {92.2, "published lower bound for 2-connected 8-manifolds with vanishing index"}},
          {std::string(keys::kT11),
           {135.9, "published lower bound for 2-connected 11-manifolds with vanishing index"}},
      });
}

ConstantRegistry ConstantRegistry::from_json_text(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("registry: invalid JSON: ") + e.what());
  }
  if (!document.is_object()) {
    throw DomainError("registry: top level must be a JSON object");
  }

  static const std::regex kPairPattern(R"(^\s*(\d+)\s*,\s*(\d+)\s*$)");
  std::vector<GammaInput> entries;
  std::vector<std::pair<std::string, NamedConstant>> extras;

  for (const auto& [key, value] : document.items()) {
    if (key == "extra") {
      if (!value.is_object()) {
        throw DomainError("registry: 'extra' must be an object");
      }
      for (const auto& [name, item] : value.items()) {
        if (item.is_number()) {
          extras.push_back({name, {item.get<double>(), "registry file"}});
          continue;
        }
        if (!item.is_object()) {
          throw DomainError("registry: extra '" + name + "' must be a number or object");
        }
        for (const auto& [field, unused] : item.items()) {
          if (field != "value" && field != "source") {
            throw DomainError("registry: unknown field '" + field + "' in extra '" + name + "'");
          }
        }
        if (!item.contains("value") || !item["value"].is_number()) {
          throw DomainError("registry: extra '" + name + "' needs a numeric 'value'");
        }
        const std::string source =
            item.contains("source") ? item["source"].get<std::string>() : "registry file";
        extras.push_back({name, {item["value"].get<double>(), source}});
      }
      continue;
    }

    std::smatch match;
    if (!std::regex_match(key, match, kPairPattern)) {
      throw DomainError("registry: unknown key '" + key + "'");
    }
    if (!value.is_object()) {
      throw DomainError("registry: entry '" + key + "' must be an object");
    }
    for (const auto& [field, unused] : value.items()) {
      if (field != "gamma" && field != "source") {
        throw DomainError("registry: unknown field '" + field + "' in entry '" + key + "'");
      }
    }
    if (!value.contains("gamma") || !value["gamma"].is_number() || !value.contains("source") ||
        !value["source"].is_string()) {
      throw DomainError("registry: entry '" + key + "' needs numeric 'gamma' and string 'source'");
    }
    entries.push_back({ModelSpaceParams(std::stoi(match[1].str()), std::stoi(match[2].str())),
                       value["gamma"].get<double>(), value["source"].get<std::string>()});
  }
  return ConstantRegistry(std::move(entries), std::move(extras));
}

ConstantRegistry ConstantRegistry::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("registry: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::string ConstantRegistry::to_json_text() const {
  json document = json::object();
  for (const auto& [key, entry] : entries_) {
    document[pair_key(key.first, key.second)] = {{"gamma", entry.gamma}, {"source", entry.source}};
  }
  json extra = json::object();
  for (const auto& [key, constant] : extras_) {
    extra[key] = {{"value", constant.value}, {"source", constant.source}};
  }
  document["extra"] = std::move(extra);
  return document.dump(2);
}

std::optional<GammaInput> ConstantRegistry::find(const ModelSpaceParams& params) const {
  const auto it = entries_.find({params.v(), params.w()});
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<NamedConstant> ConstantRegistry::extra(std::string_view key) const {
  const auto it = extras_.find(key);
  if (it == extras_.end()) {
    return std::nullopt;
  }
  return it->second;
}

NamedConstant ConstantRegistry::require_extra(std::string_view key) const {
  auto constant = extra(key);
  if (!constant) {
    throw MissingConstantError("named constant '" + std::string(key) + "'");
  }
  return *constant;
}

GammaInput product_formula_gamma(int n) {
  if (n < 6) {
    throw DomainError("product_formula_gamma: needs n >= 6 (v = n-2 >= 4, w = 2), got n = " +
                      std::to_string(n));
  }
  const double m = n - 3.0;
  const double prefactor = n * yamabe_coefficient(n) /
                           (std::pow(24.0, 3.0 / n) * std::pow(m * yamabe_coefficient(n - 3), m / n));
  const double mu0 = prefactor * std::pow(sphere_yamabe(n - 3), m / n) *
                     std::pow(sphere_yamabe(3), 3.0 / n);
  return {ModelSpaceParams(n - 2, 2), mu0 / sphere_yamabe(n),
          "product formula, case (iv): w = 2, v = " + std::to_string(n - 2)};
}

GammaInput effective_gamma(const ModelSpaceParams& params, const ConstantRegistry& registry) {
  if (auto entry = registry.find(params)) {
    return *entry;
  }
  if (params.w() == 2 && params.v() >= 4) {
    return product_formula_gamma(params.n());
  }
  throw MissingConstantError("gamma for (v,w) = " + pair_key(params.v(), params.w()) +
                             " (not in the registry and no built-in formula covers it)");
}

}  // namespace yamabe
