#include "yamabe/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_half_integer_multiple(double x) {
  const double twice = 2.0 * x;
  return twice == std::floor(twice);
}

// Exact recurrence Gamma(x+1) = x Gamma(x), seeded with Gamma(1) or Gamma(1/2).
double gamma_by_recurrence(double x) {
  double value = (x == std::floor(x)) ? 1.0 : std::sqrt(kPi);
  for (double t = (x == std::floor(x)) ? 1.0 : 0.5; t < x; t += 1.0) {
    value *= t;
  }
  return value;
}

double gamma_lanczos(double x) {
  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoefficients = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

  if (x < 0.5) {
    // Reflection keeps the series in its accurate range.
    return kPi / (std::sin(kPi * x) * gamma_lanczos(1.0 - x));
  }
  const double z = x - 1.0;
  double sum = kCoefficients[0];
  for (std::size_t i = 1; i < kCoefficients.size(); ++i) {
    sum += kCoefficients[i] / (z + static_cast<double>(i));
  }
  const double t = z + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

void require_dimension(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + ": dimension must be >= " + std::to_string(minimum) +
                      ", got " + std::to_string(n));
  }
}

}  // namespace

double gamma_function(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_function: argument must be a positive finite real");
  }
  if (is_half_integer_multiple(x) && x <= 170.0) {
    return gamma_by_recurrence(x);
  }
  return gamma_lanczos(x);
}

double sphere_volume(int w) {
  require_dimension(w, 1, "sphere_volume");
  const double half = 0.5 * (w + 1);
  return 2.0 * std::pow(kPi, half) / gamma_function(half);
}

double sphere_yamabe(int n) {
  require_dimension(n, 3, "sphere_yamabe");
  return n * (n - 1.0) * std::pow(sphere_volume(n), 2.0 / n);
}

double yamabe_coefficient(int n) {
  require_dimension(n, 3, "yamabe_coefficient");
  return 4.0 * (n - 1.0) / (n - 2.0);
}

double critical_exponent(int n) {
  require_dimension(n, 3, "critical_exponent");
  return 2.0 * n / (n - 2.0);
}

SphereConstant sphere_constant(int n) {
  require_dimension(n, 3, "sphere_constant");
  return {n, sphere_volume(n), sphere_yamabe(n)};
}

double wu_manifold_yamabe() {
  // Ric = 6g on a 5-manifold gives scalar curvature 30.
  return 30.0 * std::pow(std::sqrt(3.0) / 8.0 * kPi * kPi * kPi, 2.0 / 5.0);
}

double s3xs3_yamabe() {
  // scal = 12, volume = vol(S^3)^2, n = 6.
  return 12.0 * std::pow(2.0 * kPi * kPi, 2.0 / 3.0);
}

double hp_normalized_volume(int n) {
  require_dimension(n, 1, "hp_normalized_volume");
  const double scale = (4.0 * n + 8.0) / (4.0 * n - 1.0);
  return std::pow(scale, 2.0 * n) * sphere_volume(4 * n + 3) / sphere_volume(3);
}

}  // namespace yamabe
