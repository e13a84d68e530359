#pragma once

// Closed-form dimensional constants: sphere volumes, sphere Yamabe constants,
// the conformal Laplacian coefficient and critical exponent, and a few
// manifold-specific Yamabe constants obtained from Obata's theorem.
//
// Everything here is computed on demand from its formula. Nothing is tabulated.

namespace yamabe {

/// Gamma function for x > 0. Integer and half-integer arguments go through
/// the exact recurrence from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi); other
/// arguments use a Lanczos approximation (g = 7, 9 terms).
double gamma_function(double x);

/// Volume of the round unit sphere S^w, w >= 1.
double sphere_volume(int w);

/// Yamabe constant of the round sphere, n(n-1) * vol(S^n)^(2/n), n >= 3.
double sphere_yamabe(int n);

/// a_n = 4(n-1)/(n-2), the coefficient of the Laplacian in the conformal
/// Laplacian. Requires n >= 3.
double yamabe_coefficient(int n);

/// p_n = 2n/(n-2), the critical Sobolev exponent. Requires n >= 3.
double critical_exponent(int n);

struct SphereConstant {
  int n;
  double volume;
  double yamabe;
};

SphereConstant sphere_constant(int n);

/// Yamabe constant of the Wu manifold SU(3)/SO(3) with its Einstein metric.
double wu_manifold_yamabe();

/// Yamabe constant of S^3 x S^3 with the product of round metrics.
double s3xs3_yamabe();

/// Volume of HP^n after rescaling the submersion metric to scalar curvature
/// 4n(4n-1): ((4n+8)/(4n-1))^(2n) * vol(S^(4n+3)) / vol(S^3).
double hp_normalized_volume(int n);

}  // namespace yamabe
