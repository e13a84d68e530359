#pragma once

#include <compare>

namespace yamabe {

/// Dimensions (v, w) of the model space H^v_c x S^w, with n = v + w and the
/// surgery index k = v - 1.
class ModelSpaceParams {
 public:
  /// Requires v >= 1, w >= 1 and n = v + w >= 3.
  ModelSpaceParams(int v, int w);

  /// Translate a surgery pair (n, k) to (v, w) = (k + 1, n - k - 1).
  /// Requires n >= 3 and 0 <= k <= n - 3.
  static ModelSpaceParams from_surgery(int n, int k);

  int v() const noexcept { return v_; }
  int w() const noexcept { return w_; }
  int n() const noexcept { return v_ + w_; }
  int k() const noexcept { return v_ - 1; }

  /// v(v-1) and w(w-1): the scalar curvatures of H^v_1 (up to sign) and S^w.
  double hyperbolic_factor() const noexcept { return v_ * (v_ - 1.0); }
  double sphere_factor() const noexcept { return w_ * (w_ - 1.0); }

  /// 2w/n, the exponent of c in the homothety bound.
  double homothety_exponent() const noexcept { return 2.0 * w_ / n(); }

  friend auto operator<=>(const ModelSpaceParams&, const ModelSpaceParams&) = default;

 private:
  int v_;
  int w_;
};

/// M_c = H^v_c x S^w for a curvature scale c in [0, 1].
struct CurvedModelSpace {
  CurvedModelSpace(ModelSpaceParams params, double c);

  ModelSpaceParams params;
  double c;
};

/// s_c = w(w-1) - c^2 v(v-1). Negative for c near 1 when v > w.
double scalar_curvature(const CurvedModelSpace& space);

struct InterpolationWeights {
  double lambda0;
  double tau0;
};

/// Intersection of the lines lambda + tau = 1 and lambda c^2 s_1 + tau s_0 = s_c.
///
/// lambda0 = c^2 v(v-1) / ((1 - c^2) w(w-1) + c^2 v(v-1)), which equals
/// v(v-1) / ((c^-2 - 1) w(w-1) + v(v-1)) for c in (0,1) and extends
/// continuously to lambda0(0) = 0 and lambda0(1) = 1 on the closed interval.
InterpolationWeights interpolation_weights(const CurvedModelSpace& space);

/// True iff lambda, tau >= 0, lambda + tau <= 1 and
/// lambda c^2 s_1 + tau s_0 <= s_c, each up to 1e-12 * max(1, |s_c|).
bool weights_satisfy_constraints(const CurvedModelSpace& space, double lambda, double tau);

/// The c* in [0,1] with (c*)^(2w/n) = gamma. Below c* the interpolated bound
/// beats the homothety bound, above it the homothety bound wins.
double crossover_c(const ModelSpaceParams& params, double gamma);

}  // namespace yamabe
