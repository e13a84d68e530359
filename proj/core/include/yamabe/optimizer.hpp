#pragma once

// Derivative-free minimization over c in [0,1]: a uniform grid scan followed
// by golden-section refinement of the best grid bracket. The combined bound
// has a kink at the crossover point, so no derivatives are used.

#include <functional>

#include "yamabe/bounds.hpp"
#include "yamabe/model_space.hpp"

namespace yamabe {

struct MinimizationConfig {
  int grid_points = 2000;
  double refine_tolerance = 1e-10;  ///< target bracket width in c
  double value_slack = 0.0;         ///< subtracted from reported bound values

  /// Throws DomainError if grid_points < 2, refine_tolerance <= 0 or
  /// value_slack < 0.
  void validate() const;
};

struct MinimizationResult {
  double min_value;  ///< smallest objective value actually evaluated
  double argmin_c;   ///< where min_value was evaluated
  int evaluations;
  double bracket_width;
  double bracket_lo;
  double bracket_hi;
};

/// Minimize a continuous objective on [0,1]. Throws NumericalError naming c
/// if the objective returns a non-finite value.
MinimizationResult minimize_on_unit_interval(const std::function<double(double)>& objective,
                                             const MinimizationConfig& config = {});

/// Minimize the selected bound over c in [0,1] and report it as a BoundResult.
/// RelaxedClosedForm and EqualDimensionClosedForm return their closed forms.
BoundResult minimize_bound(const ModelSpaceParams& params, double gamma, BoundFormula which,
                           const MinimizationConfig& config = {});

}  // namespace yamabe
