#include "yamabe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "yamabe/constants.hpp"
#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

std::string point_message(const char* prefix, double x) {
  std::ostringstream text;
  text << prefix << x;
  return text.str();
}

class TrackedObjective {
 public:
  explicit TrackedObjective(const std::function<double(double)>& f) : f_(f) {}

  double operator()(double c) {
    const double value = f_(c);
    ++evaluations_;
    if (!std::isfinite(value)) {
      throw NumericalError(point_message("objective is not finite at c = ", c));
    }
    if (value < best_value_) {
      best_value_ = value;
      best_c_ = c;
    }
    return value;
  }

  int evaluations() const { return evaluations_; }
  double best_value() const { return best_value_; }
  double best_c() const { return best_c_; }

 private:
  const std::function<double(double)>& f_;
  int evaluations_ = 0;
  double best_value_ = std::numeric_limits<double>::infinity();
  double best_c_ = 0.0;
};

}  // namespace

void MinimizationConfig::validate() const {
  if (grid_points < 2) {
    throw DomainError("minimization: grid_points must be >= 2");
  }
  if (!(refine_tolerance > 0.0)) {
    throw DomainError("minimization: refine_tolerance must be positive");
  }
  if (!(value_slack >= 0.0)) {
    throw DomainError("minimization: value_slack must be non-negative");
  }
}

MinimizationResult minimize_on_unit_interval(const std::function<double(double)>& objective,
                                             const MinimizationConfig& config) {
  config.validate();
  TrackedObjective f(objective);

  const int last = config.grid_points - 1;
  const auto grid_c = [last](int i) { return static_cast<double>(i) / last; };

  int best_index = 0;
  double best_grid_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= last; ++i) {
    const double value = f(grid_c(i));
    if (value < best_grid_value) {
      best_grid_value = value;
      best_index = i;
    }
  }

  double lo = grid_c(std::max(best_index - 1, 0));
  double hi = grid_c(std::min(best_index + 1, last));

  constexpr double kInvPhi = 0.6180339887498948482;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > config.refine_tolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }

  return {f.best_value(), f.best_c(), f.evaluations(), hi - lo, lo, hi};
}

BoundResult minimize_bound(const ModelSpaceParams& params, double gamma, BoundFormula which,
                           const MinimizationConfig& config) {
  require_gamma(gamma);
  config.validate();
  if (which == BoundFormula::RelaxedClosedForm) {
    return relaxed_closed_form_bound(params, gamma);
  }
  if (which == BoundFormula::EqualDimensionClosedForm) {
    return equal_dimension_bound(params, gamma);
  }
  if (which == BoundFormula::GeneralRefinedVgtW && params.v() <= params.w()) {
    throw NotApplicableError("refined bound needs v > w");
  }
  if (which == BoundFormula::CurvatureComparison) {
    // Only defined where s_c > 0; minimizing over [0,1] would leave that set
    // whenever v >= w.
    if (params.hyperbolic_factor() >= params.sphere_factor()) {
      throw NotApplicableError("curvature comparison is not defined on all of [0,1] when v >= w");
    }
  }

  const auto objective = [&](double c) {
    return evaluate_bound(which, CurvedModelSpace(params, c), gamma);
  };
  const MinimizationResult result = minimize_on_unit_interval(objective, config);
  const double mu1 = sphere_yamabe(params.n());
  const double value = result.min_value - config.value_slack;
  return {value, result.argmin_c, which, value / mu1, result.bracket_width};
}

}  // namespace yamabe
