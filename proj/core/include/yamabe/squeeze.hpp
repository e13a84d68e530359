#pragma once

// The radial squeezing map R^v -> H^v_c.
//
// In polar coordinates the map is (t, theta) -> (f_c(t), theta) where
// f_c = phi_c^{-1} and
//
//   phi_c(r) = (v * integral_0^r sh_c(t)^(v-1) dt)^(1/v),  sh_c(t) = sinh(ct)/c.
//
// It preserves volume: the Euclidean ball of radius r and the hyperbolic ball
// of radius f_c(r) have the same volume, and f_c' <= 1.

#include <functional>

namespace yamabe {

/// sinh(c t) / c, with the series t (1 + (ct)^2/6 + (ct)^4/120) for ct < 1e-4
/// and sh(0, t) = t.
double sh(double c, double t);

struct QuadratureResult {
  double value;
  double error_estimate;
  int evaluations;
};

/// Adaptive 15-point Gauss-Kronrod quadrature aiming at relative_tolerance.
/// Accepts the result when the error estimate is at most
/// max(absolute_tolerance, 10 * relative_tolerance * L1); throws
/// NumericalError otherwise, or if the integrand is not finite.
QuadratureResult integrate(const std::function<double(double)>& integrand, double a, double b,
                           double absolute_tolerance, double relative_tolerance = 1e-13,
                           int max_depth = 15);

struct SqueezeEvaluation {
  double r;
  double f_of_r;
  double f_prime;
  double quad_error;
};

class SqueezeMap {
 public:
  /// v >= 2, c in [0,1] (c = 0 is the identity), quadrature_tolerance > 0.
  SqueezeMap(int v, double c, double quadrature_tolerance = 1e-12);

  int v() const noexcept { return v_; }
  double c() const noexcept { return c_; }

  /// integral_0^t sh_c(s)^(v-1) ds; the volume of a hyperbolic ball of radius
  /// t divided by vol(S^(v-1)).
  QuadratureResult ball_volume_integral(double t) const;

  double phi(double r) const;

  /// The t in [0, r] with phi(t) = r.
  double f(double r) const;

  /// r^(v-1) / sh_c(f(r))^(v-1); 1 at r = 0.
  double f_prime(double r) const;

  SqueezeEvaluation evaluate(double r) const;

 private:
  struct Inverse {
    double t;
    double quad_error;
  };
  Inverse invert(double r) const;

  int v_;
  double c_;
  double quadrature_tolerance_;
};

}  // namespace yamabe

