#pragma once

// Assembly of the published result tables: lower bounds for the surgery
// constants Lambda_{n,k} (table1), the smooth Yamabe invariant bounds for
// simply connected and 2-connected manifolds, and the t_n table.
// Every number carries the trace of how it was obtained.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yamabe/bounds.hpp"
#include "yamabe/mu_zero.hpp"
#include "yamabe/optimizer.hpp"

namespace yamabe {

/// Truncate toward -infinity at the given number of decimals. A relative
/// guard of 1e-12 keeps values such as 97.3 from printing as 97.2.
double round_down(double value, int decimals);

/// gamma truncated to three decimals, as printed in the mu_0/mu_1 column.
double printed_gamma(double gamma);

struct Table1Row {
  ModelSpaceParams params;
  GammaInput gamma;
  double numeric_gamma;  ///< printed_gamma(gamma.gamma); used for the numeric column
  BoundResult analytic;
  /// round_down(analytic.ratio, 3) * mu1: the analytic estimate stated as
  /// "ratio * mu_1" with the ratio truncated first, as tabulated.
  double analytic_reported;
  BoundResult numeric;
  double mu1;
  /// Why Lambda_{n,k} = Lambda^(1)_{n,k} holds for this (n,k).
  std::string reduction_note;
};

/// Rows (2,2), (2,3), (2,7), (2,8), (3,2), (4,2) in that order. Analytic column:
/// EqualDimensionClosedForm for (2,2), RelaxedClosedForm for the next four, the minimum of
/// general_bound_refined for (4,2). Numeric column: minimum of general_bound.
std::vector<Table1Row> build_table1(const ConstantRegistry& registry,
                                    const MinimizationConfig& config = {});

/// Numeric table1 bound for one (v,w), the Lambda_{n,k} ingredient of the
/// sigma bounds.
BoundResult surgery_constant_bound(const ModelSpaceParams& params, const ConstantRegistry& registry,
                                   const MinimizationConfig& config = {});

enum class SigmaHypothesis { SimplyConnected5, SimplyConnected6, TwoConnected9, TwoConnected10 };

std::string_view to_string(SigmaHypothesis hypothesis);

struct Ingredient {
  std::string name;
  double value;
  std::string provenance;
  std::optional<BoundResult> bound;  ///< set when computed by minimization
};

struct SigmaBound {
  int dimension;
  SigmaHypothesis hypothesis;
  double value;  ///< min over ingredients
  bool strict;   ///< sigma(M) > value rather than >=
  double upper;  ///< sigma(M) <= mu(S^n)
  std::vector<Ingredient> ingredients;
  bool caveat = false;
  std::string caveat_note;
};

/// Simply connected 5-manifolds: min(Lambda_{5,2}, sigma(SU(3)/SO(3))).
SigmaBound sigma_bound_dim5(const ConstantRegistry& registry, const MinimizationConfig& config = {});

/// Simply connected 6-manifolds: min(Lambda_{6,2}, Lambda_{6,3}). Lambda_{6,2}
/// is read from the registry key lambda_6_2; without it the bound is
/// Lambda_{6,3} alone and carries a caveat.
SigmaBound sigma_bound_dim6(const ConstantRegistry& registry, const MinimizationConfig& config = {});

/// 2-connected spin manifolds with vanishing alpha-genus in dimensions 9, 10.
std::pair<SigmaBound, SigmaBound> sigma_bound_dim9_10(const ConstantRegistry& registry,
                                                      const MinimizationConfig& config = {});

enum class TnStatus { Computed, External, Unknown };

std::string_view to_string(TnStatus status);

struct TnRow {
  int n;
  TnStatus status;
  std::optional<double> t_n;
  std::string source;
  double sphere_sigma;  ///< sigma(S^n) = mu(S^n), for comparison
};

/// Rows for n = 3..11.
std::vector<TnRow> build_table_tn(const ConstantRegistry& registry,
                                  const MinimizationConfig& config = {});

}  // namespace yamabe
