#pragma once

// Closed-form lower bounds for mu_c = mu(H^v_c x S^w).
//
// All pointwise bounds return absolute values (units of mu), evaluated at a
// single c in [0,1]. gamma is a certified lower bound for mu_0 / mu_1 with
// mu_1 = mu(S^n).

#include <string_view>

#include "yamabe/model_space.hpp"

namespace yamabe {

enum class BoundFormula {
  Homothety,            ///< c^(2w/n) mu_1
  CurvatureComparison,  ///< (s_c / s_0) mu_0, valid where s_c > 0
  General,              ///< interpolation of the two comparison maps
  GeneralRefinedVgtW,   ///< weakened General for v > w, using c^(2w/n) >= c
  RelaxedClosedForm,          ///< closed-form minimum of the c^2 relaxation
  EqualDimensionClosedForm,          ///< closed-form minimum for v = w
  Combined,             ///< pointwise max of the applicable bounds
};

std::string_view to_string(BoundFormula formula);
/// Accepts the names produced by to_string (case-sensitive). Throws DomainError.
BoundFormula bound_formula_from_string(std::string_view name);

struct BoundResult {
  double value;        ///< certified lower bound for inf_c mu_c
  double minimizer_c;  ///< where the bound's objective attains its minimum
  BoundFormula formula;
  double ratio;      ///< value / mu_1
  double tolerance;  ///< accuracy of minimizer_c (0 for closed forms)
};

double homothety_bound(const CurvedModelSpace& space);

/// Throws NotApplicableError when s_c <= 0.
double curvature_comparison_bound(const CurvedModelSpace& space, double gamma);

/// (gamma - lambda0(c) (gamma - c^(2w/n))) mu_1.
double general_bound(const CurvedModelSpace& space, double gamma);

/// (1 - (1-c) c^2 v(v-1) / ((1-c^2) w(w-1) + c^2 v(v-1))) gamma mu_1.
/// Throws NotApplicableError unless v > w.
double general_bound_refined(const CurvedModelSpace& space, double gamma);

/// (1 - (1-c^2) c^2 v(v-1) / ((1-c^2) w(w-1) + c^2 v(v-1))) gamma mu_1, the
/// relaxation of general_bound obtained from mu_1 > mu_0 and c^(2w/n) >= c^2.
double general_bound_relaxed(const CurvedModelSpace& space, double gamma);

/// max(general, homothety, and general_bound_refined when v > w).
double combined_pointwise_bound(const CurvedModelSpace& space, double gamma);

/// Dispatch on the pointwise formulas. RelaxedClosedForm/44 are not pointwise and
/// map to the objective they minimize (general_bound_relaxed and general_bound).
double evaluate_bound(BoundFormula formula, const CurvedModelSpace& space, double gamma);

/// Minimum of general_bound_relaxed over c in [0,1]:
///   (1 - v(v-1) / (sqrt(v(v-1)) + sqrt(w(w-1)))^2) gamma mu_1,
/// attained at c^2 = sqrt(w(w-1)) / (sqrt(v(v-1)) + sqrt(w(w-1))).
/// Requires v, w >= 2.
BoundResult relaxed_closed_form_bound(const ModelSpaceParams& params, double gamma);

/// For v = w: (gamma - 4 gamma^3 / 27) mu_1, attained at c = 2 gamma / 3.
BoundResult equal_dimension_bound(const ModelSpaceParams& params, double gamma);

/// Real root of 5c^3 + 3c = 2, the minimizer of general_bound_refined for
/// (v,w) = (4,2), via Cardano: cbrt(25 + 5 sqrt 30)/5 + 1/cbrt(25 + 5 sqrt 30).
double refined_cubic_minimizer();

/// Throws DomainError unless 0 < gamma <= 1.
void require_gamma(double gamma);

}  // namespace yamabe
