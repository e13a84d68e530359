#include "yamabe/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "yamabe/errors.hpp"

namespace yamabe {

ModelSpaceParams::ModelSpaceParams(int v, int w) : v_(v), w_(w) {
  if (v < 1 || w < 1) {
    throw DomainError("model space: need v >= 1 and w >= 1, got (v,w) = (" + std::to_string(v) +
                      "," + std::to_string(w) + ")");
  }
  if (v + w < 3) {
    throw DomainError("model space: need n = v + w >= 3");
  }
}

ModelSpaceParams ModelSpaceParams::from_surgery(int n, int k) {
  if (n < 3 || k < 0 || k > n - 3) {
    throw DomainError("surgery pair: need n >= 3 and 0 <= k <= n-3, got (n,k) = (" +
                      std::to_string(n) + "," + std::to_string(k) + ")");
  }
  return {k + 1, n - k - 1};
}

CurvedModelSpace::CurvedModelSpace(ModelSpaceParams p, double curvature) : params(p), c(curvature) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw DomainError("curvature scale c must lie in [0,1]");
  }
}

double scalar_curvature(const CurvedModelSpace& space) {
  return space.params.sphere_factor() - space.c * space.c * space.params.hyperbolic_factor();
}

InterpolationWeights interpolation_weights(const CurvedModelSpace& space) {
  const double c2 = space.c * space.c;
  const double hyp = space.params.hyperbolic_factor();
  const double sph = space.params.sphere_factor();
  const double denominator = (1.0 - c2) * sph + c2 * hyp;
  // The denominator vanishes only for (w = 1, c = 0) or (v = 1, c = 1); use
  // the endpoint convention there.
  const double lambda0 = denominator > 0.0 ? c2 * hyp / denominator : (space.c >= 1.0 ? 1.0 : 0.0);
  return {lambda0, 1.0 - lambda0};
}

bool weights_satisfy_constraints(const CurvedModelSpace& space, double lambda, double tau) {
  if (lambda < 0.0 || tau < 0.0) {
    return false;
  }
  const double s_c = scalar_curvature(space);
  const double s_0 = space.params.sphere_factor();
  const double s_1 = s_0 - space.params.hyperbolic_factor();
  const double tolerance = 1e-12 * std::max(1.0, std::abs(s_c));

  const double sum_residual = lambda + tau - 1.0;
  const double curvature_residual = lambda * space.c * space.c * s_1 + tau * s_0 - s_c;
  return sum_residual <= tolerance && curvature_residual <= tolerance;
}

double crossover_c(const ModelSpaceParams& params, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("crossover_c: gamma must lie in (0,1]");
  }
  return std::pow(gamma, 1.0 / params.homothety_exponent());
}

}  // namespace yamabe
