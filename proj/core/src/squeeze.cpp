#include "yamabe/squeeze.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "yamabe/errors.hpp"

namespace yamabe {

double sh(double c, double t) {
  const double x = c * t;
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return t * (1.0 + x2 / 6.0 * (1.0 + x2 / 20.0));
  }
  return std::sinh(x) / c;
}

QuadratureResult integrate(const std::function<double(double)>& integrand, double a, double b,
                           double absolute_tolerance, double relative_tolerance, int max_depth) {
  if (a == b) {
    return {0.0, 0.0, 0};
  }
  int evaluations = 0;
  const auto counted = [&](double x) {
    const double y = integrand(x);
    ++evaluations;
    if (!std::isfinite(y)) {
      std::ostringstream message;
      message << "quadrature: integrand not finite at t = " << x;
      throw NumericalError(message.str());
    }
    return y;
  };
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      counted, a, b, static_cast<unsigned>(max_depth), relative_tolerance, &error, &l1);
  // Subinterval estimates are summed, so a converged result can sit slightly
  // above the requested relative tolerance.
  if (!(error <= std::max(absolute_tolerance, 10.0 * relative_tolerance * l1))) {
    std::ostringstream message;
    message << "quadrature: no convergence on [" << a << ", " << b << "] after depth "
            << max_depth << ", error estimate " << error;
    throw NumericalError(message.str());
  }
  return {value, error, evaluations};
}

SqueezeMap::SqueezeMap(int v, double c, double quadrature_tolerance)
    : v_(v), c_(c), quadrature_tolerance_(quadrature_tolerance) {
  if (v < 2) {
    throw DomainError("squeeze map: hyperbolic dimension v must be >= 2");
  }
  if (!(c >= 0.0 && c <= 1.0)) {
    throw DomainError("squeeze map: c must lie in [0,1]");
  }
  if (!(quadrature_tolerance > 0.0)) {
    throw DomainError("squeeze map: quadrature tolerance must be positive");
  }
}

QuadratureResult SqueezeMap::ball_volume_integral(double t) const {
  if (!(t >= 0.0)) {
    throw DomainError("squeeze map: radius must be non-negative");
  }
  const int power = v_ - 1;
  const double c = c_;
  const auto integrand = [c, power](double s) {
    const double base = sh(c, s);
    double product = base;
    for (int i = 1; i < power; ++i) {
      product *= base;
    }
    return product;
  };
  return integrate(integrand, 0.0, t, quadrature_tolerance_);
}

double SqueezeMap::phi(double r) const {
  if (r == 0.0) {
    return 0.0;
  }
  return std::pow(v_ * ball_volume_integral(r).value, 1.0 / v_);
}

SqueezeMap::Inverse SqueezeMap::invert(double r) const {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("squeeze map: radius must be a non-negative finite real");
  }
  if (r == 0.0) {
    return {0.0, 0.0};
  }
  if (c_ == 0.0) {
    return {r, 0.0};
  }

  // Solve V(t) = r^v / v on [0, r], V(t) = integral_0^t sh_c^(v-1).
  // phi_c(t) >= t gives V(r) >= r^v / v, so [0, r] brackets the root. V is
  // increasing and convex, so Newton started at the right end decreases
  // monotonically onto the root; bisection guards against quadrature noise.
  const double target = std::pow(r, v_) / v_;
  double lo = 0.0;
  double hi = r;
  double t = r;
  QuadratureResult volume = ball_volume_integral(t);
  constexpr int kMaxIterations = 200;
  double previous_step = r;
  for (int iteration = 0; iteration < kMaxIterations; ++iteration) {
    const double residual = volume.value - target;
    if (residual > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    if (residual == 0.0) {
      break;
    }
    const double slope = std::pow(sh(c_, t), v_ - 1);
    double next = t - residual / slope;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double step = std::abs(next - t);
    t = next;
    volume = ball_volume_integral(t);
    // Stop at machine precision, or once Newton stagnates in quadrature noise.
    const bool stagnating = step < 1e-12 * (1.0 + t) && step > 0.5 * previous_step;
    if (step <= 4e-16 * (1.0 + t) || hi - lo <= 4e-16 * hi || stagnating) {
      break;
    }
    previous_step = step;
  }

  const double achieved = std::pow(v_ * volume.value, 1.0 / v_);
  if (!(std::abs(achieved - r) <= 1e-10 * (1.0 + r))) {
    throw NumericalError("squeeze map: root finding for f(" + std::to_string(r) +
                         ") stalled with |phi(t) - r| = " + std::to_string(std::abs(achieved - r)));
  }
  return {t, volume.error_estimate};
}

double SqueezeMap::f(double r) const { return invert(r).t; }

double SqueezeMap::f_prime(double r) const { return evaluate(r).f_prime; }

SqueezeEvaluation SqueezeMap::evaluate(double r) const {
  const Inverse inverse = invert(r);
  double derivative = 1.0;
  if (r > 0.0) {
    derivative = std::pow(r / sh(c_, inverse.t), v_ - 1);
  }
  return {r, inverse.t, derivative, inverse.quad_error};
}

}  // namespace yamabe
