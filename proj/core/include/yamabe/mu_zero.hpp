#pragma once

// Lower bounds gamma <= mu_0 / mu_1 for the flat model R^v x S^w.
//
// Most of these come from isoperimetric-profile estimates published elsewhere
// and are carried as provenance-tagged registry entries. The case w = 2,
// v >= 4 has an explicit product-formula bound computed here.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yamabe/model_space.hpp"

namespace yamabe {

struct GammaInput {
  ModelSpaceParams params;
  double gamma;
  std::string source;
};

/// A named real constant with its provenance.
struct NamedConstant {
  double value;
  std::string source;
};

/// Keys of the default named constants.
namespace keys {
inline constexpr std::string_view kMinLambda9 = "min_lambda_9_2to5";
inline constexpr std::string_view kMinLambda10 = "min_lambda_10_2to6";
inline constexpr std::string_view kS1Lower = "s1_lower";
inline constexpr std::string_view kS2Lower = "s2_lower";
inline constexpr std::string_view kLambda62 = "lambda_6_2";
inline constexpr std::string_view kT7 = "t7";
inline constexpr std::string_view kT8 = "t8";
inline constexpr std::string_view kT11 = "t11";
}  // namespace keys

/// Registry of externally sourced constants: gamma ratios keyed by (v, w) and
/// named extras. Filled once at construction, read-only afterwards.
class ConstantRegistry {
 public:
  ConstantRegistry() = default;
  ConstantRegistry(std::vector<GammaInput> entries,
                   std::vector<std::pair<std::string, NamedConstant>> extras);

  /// Compiled-in constants, stored exactly as printed in the literature.
  static ConstantRegistry defaults();

  /// Parse the JSON registry format:
  ///   { "v,w": {"gamma": number, "source": string}, ...,
  ///     "extra": { "name": number | {"value": number, "source": string}, ... } }
  /// Unknown keys are rejected with DomainError.
  static ConstantRegistry from_json_text(std::string_view text);
  static ConstantRegistry from_file(const std::filesystem::path& path);

  std::string to_json_text() const;

  std::optional<GammaInput> find(const ModelSpaceParams& params) const;
  std::optional<NamedConstant> extra(std::string_view key) const;
  /// Throws MissingConstantError naming the key.
  NamedConstant require_extra(std::string_view key) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty() && extras_.empty(); }

 private:
  void add(GammaInput entry);
  void add_extra(std::string key, NamedConstant constant);

  std::map<std::pair<int, int>, GammaInput> entries_;
  std::map<std::string, NamedConstant, std::less<>> extras_;
};

/// Product-formula bound for w = 2, v = n - 2 >= 4:
///   gamma = n a_n / (24^(3/n) ((n-3) a_(n-3))^((n-3)/n))
///           * mu(S^(n-3))^((n-3)/n) * mu(S^3)^(3/n) / mu(S^n).
GammaInput product_formula_gamma(int n);

/// Registry entry if present, else the product formula when w = 2 and v >= 4.
/// Throws MissingConstantError otherwise.
GammaInput effective_gamma(const ModelSpaceParams& params, const ConstantRegistry& registry);

}  // namespace yamabe
