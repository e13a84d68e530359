#include "yamabe/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "yamabe/constants.hpp"
#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

constexpr std::array<std::pair<BoundFormula, std::string_view>, 7> kFormulaNames = {{
    {BoundFormula::Homothety, "homothety"},
    {BoundFormula::CurvatureComparison, "curvature-comparison"},
    {BoundFormula::General, "general"},
    {BoundFormula::GeneralRefinedVgtW, "general-refined"},
    {BoundFormula::RelaxedClosedForm, "relaxed-closed-form"},
    {BoundFormula::EqualDimensionClosedForm, "equal-dimension"},
    {BoundFormula::Combined, "combined"},
}};

// c^2 v(v-1) / ((1-c^2) w(w-1) + c^2 v(v-1)); the bracket shared by all
// interpolation-type bounds, equal to lambda0(c).
double interpolation_fraction(const CurvedModelSpace& space) {
  return interpolation_weights(space).lambda0;
}

}  // namespace

std::string_view to_string(BoundFormula formula) {
  for (const auto& [tag, name] : kFormulaNames) {
    if (tag == formula) {
      return name;
    }
  }
  return "unknown";
}

BoundFormula bound_formula_from_string(std::string_view name) {
  for (const auto& [tag, known] : kFormulaNames) {
    if (known == name) {
      return tag;
    }
  }
  throw DomainError("unknown bound formula '" + std::string(name) + "'");
}

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in (0,1]");
  }
}

double homothety_bound(const CurvedModelSpace& space) {
  const auto& p = space.params;
  return std::pow(space.c, p.homothety_exponent()) * sphere_yamabe(p.n());
}

double curvature_comparison_bound(const CurvedModelSpace& space, double gamma) {
  require_gamma(gamma);
  const double s_c = scalar_curvature(space);
  if (!(s_c > 0.0)) {
    throw NotApplicableError("curvature comparison needs s_c > 0, but s_c = " + std::to_string(s_c));
  }
  return s_c / space.params.sphere_factor() * gamma * sphere_yamabe(space.params.n());
}

double general_bound(const CurvedModelSpace& space, double gamma) {
  require_gamma(gamma);
  const auto& p = space.params;
  const double homothety_ratio = std::pow(space.c, p.homothety_exponent());
  const double ratio = gamma - interpolation_fraction(space) * (gamma - homothety_ratio);
  return ratio * sphere_yamabe(p.n());
}

double general_bound_refined(const CurvedModelSpace& space, double gamma) {
  require_gamma(gamma);
  const auto& p = space.params;
  if (p.v() <= p.w()) {
    throw NotApplicableError("refined bound needs v > w");
  }
  const double ratio = 1.0 - (1.0 - space.c) * interpolation_fraction(space);
  return ratio * gamma * sphere_yamabe(p.n());
}

double general_bound_relaxed(const CurvedModelSpace& space, double gamma) {
  require_gamma(gamma);
  const double ratio = 1.0 - (1.0 - space.c * space.c) * interpolation_fraction(space);
  return ratio * gamma * sphere_yamabe(space.params.n());
}

double combined_pointwise_bound(const CurvedModelSpace& space, double gamma) {
  double best = std::max(general_bound(space, gamma), homothety_bound(space));
  if (space.params.v() > space.params.w()) {
    best = std::max(best, general_bound_refined(space, gamma));
  }
  return best;
}

double evaluate_bound(BoundFormula formula, const CurvedModelSpace& space, double gamma) {
  switch (formula) {
    case BoundFormula::Homothety:
      return homothety_bound(space);
    case BoundFormula::CurvatureComparison:
      return curvature_comparison_bound(space, gamma);
    case BoundFormula::General:
    case BoundFormula::EqualDimensionClosedForm:
      return general_bound(space, gamma);
    case BoundFormula::GeneralRefinedVgtW:
      return general_bound_refined(space, gamma);
    case BoundFormula::RelaxedClosedForm:
      return general_bound_relaxed(space, gamma);
    case BoundFormula::Combined:
      return combined_pointwise_bound(space, gamma);
  }
  throw DomainError("evaluate_bound: unhandled formula");
}

BoundResult relaxed_closed_form_bound(const ModelSpaceParams& params, double gamma) {
  require_gamma(gamma);
  if (params.v() < 2 || params.w() < 2) {
    throw DomainError("relaxed_closed_form_bound needs v >= 2 and w >= 2");
  }
  const double root_hyp = std::sqrt(params.hyperbolic_factor());
  const double root_sph = std::sqrt(params.sphere_factor());
  const double sum = root_hyp + root_sph;
  const double ratio = (1.0 - params.hyperbolic_factor() / (sum * sum)) * gamma;
  const double mu1 = sphere_yamabe(params.n());
  return {ratio * mu1, std::sqrt(root_sph / sum), BoundFormula::RelaxedClosedForm, ratio, 0.0};
}

BoundResult equal_dimension_bound(const ModelSpaceParams& params, double gamma) {
  require_gamma(gamma);
  if (params.v() != params.w()) {
    throw DomainError("equal_dimension_bound needs v = w");
  }
  const double ratio = gamma - 4.0 / 27.0 * gamma * gamma * gamma;
  const double mu1 = sphere_yamabe(params.n());
  return {ratio * mu1, 2.0 * gamma / 3.0, BoundFormula::EqualDimensionClosedForm, ratio, 0.0};
}

double refined_cubic_minimizer() {
  const double root = std::cbrt(25.0 + 5.0 * std::sqrt(30.0));
  return root / 5.0 - 1.0 / root;
}

}  // namespace yamabe
