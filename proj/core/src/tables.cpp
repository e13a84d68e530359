#include "yamabe/tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "yamabe/constants.hpp"
#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

struct Table1Layout {
  int v;
  int w;
  BoundFormula analytic;
  const char* reduction_note;
};

constexpr const char* kDirectReduction =
    "Lambda^(2) >= Lambda^(1) follows from the general comparison of solution spaces";

constexpr std::array<Table1Layout, 6> kTable1 = {{
    {2, 2, BoundFormula::EqualDimensionClosedForm, kDirectReduction},
    {2, 3, BoundFormula::RelaxedClosedForm, kDirectReduction},
    {2, 7, BoundFormula::RelaxedClosedForm, kDirectReduction},
    {2, 8, BoundFormula::RelaxedClosedForm, kDirectReduction},
    {3, 2, BoundFormula::RelaxedClosedForm, kDirectReduction},
    {4, 2, BoundFormula::GeneralRefinedVgtW,
     "Lambda^(2)_{6,3} >= Lambda^(1)_{6,3} by removing the singularity along S^3 in S^6"},
}};

std::string surgery_name(const ModelSpaceParams& params) {
  return "Lambda_{" + std::to_string(params.n()) + "," + std::to_string(params.k()) + "}";
}

Ingredient computed_ingredient(const ModelSpaceParams& params, const ConstantRegistry& registry,
                               const MinimizationConfig& config) {
  const BoundResult bound = surgery_constant_bound(params, registry, config);
  const GammaInput gamma = effective_gamma(params, registry);
  return {surgery_name(params), bound.value,
          std::string(to_string(bound.formula)) + " bound minimized over c in [0,1] (argmin c = " +
              std::to_string(bound.minimizer_c) + ") with gamma = " +
              std::to_string(printed_gamma(gamma.gamma)) + " from: " + gamma.source,
          bound};
}

Ingredient registry_ingredient(const ConstantRegistry& registry, std::string_view key,
                               std::string name) {
  const NamedConstant constant = registry.require_extra(key);
  return {std::move(name), constant.value, "registry '" + std::string(key) + "': " + constant.source,
          std::nullopt};
}

void finalize(SigmaBound& bound) {
  const auto it = std::min_element(
      bound.ingredients.begin(), bound.ingredients.end(),
      [](const Ingredient& a, const Ingredient& b) { return a.value < b.value; });
  bound.value = it->value;
}

}  // namespace

double round_down(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::floor(value * scale * (1.0 + 1e-12)) / scale;
}

double printed_gamma(double gamma) { return round_down(gamma, 3); }

BoundResult surgery_constant_bound(const ModelSpaceParams& params, const ConstantRegistry& registry,
                                   const MinimizationConfig& config) {
  const GammaInput gamma = effective_gamma(params, registry);
  return minimize_bound(params, printed_gamma(gamma.gamma), BoundFormula::General, config);
}

std::vector<Table1Row> build_table1(const ConstantRegistry& registry,
                                    const MinimizationConfig& config) {
  std::vector<Table1Row> rows;
  rows.reserve(kTable1.size());
  for (const auto& layout : kTable1) {
    const ModelSpaceParams params(layout.v, layout.w);
    const auto entry = registry.find(params);
    if (!entry) {
      throw MissingConstantError("table1 gamma for (v,w) = (" + std::to_string(layout.v) + "," +
                                 std::to_string(layout.w) + ")");
    }
    const double numeric_gamma = printed_gamma(entry->gamma);
    const double mu1 = sphere_yamabe(params.n());
    const BoundResult analytic = minimize_bound(params, entry->gamma, layout.analytic, config);
    rows.push_back({params, *entry, numeric_gamma, analytic, round_down(analytic.ratio, 3) * mu1,
                    minimize_bound(params, numeric_gamma, BoundFormula::General, config), mu1,
                    layout.reduction_note});
  }
  return rows;
}

std::string_view to_string(SigmaHypothesis hypothesis) {
  switch (hypothesis) {
    case SigmaHypothesis::SimplyConnected5:
      return "simply connected, n = 5";
    case SigmaHypothesis::SimplyConnected6:
      return "simply connected, n = 6";
    case SigmaHypothesis::TwoConnected9:
      return "2-connected spin, alpha = 0, n = 9";
    case SigmaHypothesis::TwoConnected10:
      return "2-connected spin, alpha = 0, n = 10";
  }
  return "unknown";
}

SigmaBound sigma_bound_dim5(const ConstantRegistry& registry, const MinimizationConfig& config) {
  SigmaBound bound{5, SigmaHypothesis::SimplyConnected5, 0.0, true, sphere_yamabe(5), {}, false, {}};
  bound.ingredients.push_back(computed_ingredient(ModelSpaceParams(3, 2), registry, config));
  bound.ingredients.push_back(
      {"sigma(SU(3)/SO(3))", wu_manifold_yamabe(),
       "Einstein metric, Obata: 30 (sqrt(3) pi^3 / 8)^(2/5); non-spin oriented boundary via M # M",
       std::nullopt});
  finalize(bound);
  return bound;
}

SigmaBound sigma_bound_dim6(const ConstantRegistry& registry, const MinimizationConfig& config) {
  SigmaBound bound{6, SigmaHypothesis::SimplyConnected6, 0.0, true, sphere_yamabe(6), {}, false, {}};
  bound.ingredients.push_back(computed_ingredient(ModelSpaceParams(4, 2), registry, config));
  if (registry.extra(keys::kLambda62)) {
    bound.ingredients.push_back(registry_ingredient(registry, keys::kLambda62, "Lambda_{6,2}"));
  } else {
    bound.caveat = true;
    bound.caveat_note =
        "Lambda_{6,2} has no registry value (key 'lambda_6_2'); the bound uses Lambda_{6,3} alone";
  }
  finalize(bound);
  return bound;
}

std::pair<SigmaBound, SigmaBound> sigma_bound_dim9_10(const ConstantRegistry& registry,
                                                      const MinimizationConfig& config) {
  SigmaBound nine{9, SigmaHypothesis::TwoConnected9, 0.0, true, sphere_yamabe(9), {}, false, {}};
  nine.ingredients.push_back(computed_ingredient(ModelSpaceParams(2, 7), registry, config));
  nine.ingredients.push_back(
      registry_ingredient(registry, keys::kMinLambda9, "min(Lambda_{9,2}, ..., Lambda_{9,5})"));
  nine.ingredients.push_back(
      registry_ingredient(registry, keys::kS1Lower, "s_1 = sigma(HP^2 x S^1)"));
  finalize(nine);

  SigmaBound ten{10, SigmaHypothesis::TwoConnected10, 0.0, false, sphere_yamabe(10), {}, false, {}};
  ten.ingredients.push_back(computed_ingredient(ModelSpaceParams(2, 8), registry, config));
  ten.ingredients.push_back(
      registry_ingredient(registry, keys::kMinLambda10, "min(Lambda_{10,2}, ..., Lambda_{10,6})"));
  ten.ingredients.push_back(
      registry_ingredient(registry, keys::kS2Lower, "s_2 = sigma(HP^2 x S^1 x S^1)"));
  finalize(ten);

  return {std::move(nine), std::move(ten)};
}

std::string_view to_string(TnStatus status) {
  switch (status) {
    case TnStatus::Computed:
      return "computed";
    case TnStatus::External:
      return "external";
    case TnStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<TnRow> build_table_tn(const ConstantRegistry& registry,
                                  const MinimizationConfig& config) {
  const auto computed = [](int n, double value, std::string source) {
    return TnRow{n, TnStatus::Computed, value, std::move(source), sphere_yamabe(n)};
  };
  const auto external = [&registry](int n, std::string_view key) {
    const NamedConstant constant = registry.require_extra(key);
    return TnRow{n, TnStatus::External, constant.value,
                 "registry '" + std::string(key) + "': " + constant.source, sphere_yamabe(n)};
  };

  const auto [nine, ten] = sigma_bound_dim9_10(registry, config);

  std::vector<TnRow> rows;
  rows.push_back(computed(3, sphere_yamabe(3), "S^3 is the only 2-connected 3-manifold"));
  rows.push_back({4, TnStatus::Unknown, std::nullopt,
                  "open: depends on the smooth Poincare conjecture in dimension 4",
                  sphere_yamabe(4)});
  rows.push_back(computed(5, sphere_yamabe(5), "S^5 is the only 2-connected 5-manifold"));
  rows.push_back(computed(6, std::min(s3xs3_yamabe(), sphere_yamabe(6)),
                          "S^6 and connected sums of S^3 x S^3; sigma(S^3 x S^3) > 12 (2 pi^2)^(2/3)"));
  rows.push_back(external(7, keys::kT7));
  rows.push_back(external(8, keys::kT8));
  rows.push_back(computed(9, nine.value, "sigma bound for 2-connected 9-manifolds"));
  rows.push_back(computed(10, ten.value, "sigma bound for 2-connected 10-manifolds"));
  rows.push_back(external(11, keys::kT11));
  return rows;
}

}  // namespace yamabe
