#include "yamabe/squeeze.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

const std::vector<double>& radius_grid() {
  static const std::vector<double> grid = {0.1, 0.2, 0.35, 0.5, 0.75, 1.0, 1.5, 2.0,
                                           3.0, 4.0, 5.0,  6.5, 8.0,  10.0};
  return grid;
}

TEST(Sh, Values) {
  EXPECT_EQ(sh(0.7, 0.0), 0.0);
  EXPECT_NEAR(sh(1.0, 1.0), 1.1752011936438014, 1e-15);
  EXPECT_NEAR(sh(1e-12, 3.0), 3.0, 1e-15);
  EXPECT_EQ(sh(0.0, 2.5), 2.5);
  // Series and libm branches agree across the switch point.
  for (double x : {0.9e-4, 1.1e-4, 1e-3}) {
    EXPECT_NEAR(sh(x, 1.0), std::sinh(x) / x, 1e-15);
  }
}

TEST(Quadrature, PolynomialAndError) {
  const auto cubic = integrate([](double x) { return x * x * x; }, 0.0, 2.0, 1e-14);
  EXPECT_NEAR(cubic.value, 4.0, 1e-13);
  EXPECT_GT(cubic.evaluations, 0);
  const auto exp = integrate([](double x) { return std::exp(x); }, 0.0, 3.0, 1e-12);
  EXPECT_NEAR(exp.value, std::exp(3.0) - 1.0, 1e-12);
  EXPECT_GE(exp.error_estimate, 0.0);
  EXPECT_THROW(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-12),
               NumericalError);
  EXPECT_THROW(integrate([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, 1e-12, 1e-13, 1),
               NumericalError);
}

TEST(SqueezeMap, BallVolumeIntegralMatchesClosedForms) {
  for (int v : {2, 3, 4}) {
    for (double c : {0.1, 0.5, 1.0}) {
      const SqueezeMap map(v, c);
      for (double t : radius_grid()) {
        const double exact = testing::sinh_power_integral(v, c, t);
        EXPECT_NEAR(map.ball_volume_integral(t).value, exact, 1e-12 * (1.0 + exact))
            << "v=" << v << " c=" << c << " t=" << t;
      }
    }
  }
}

TEST(SqueezeMap, PhiClosedFormForPlane) {
  const SqueezeMap map(2, 1.0);
  EXPECT_EQ(map.phi(0.0), 0.0);
  for (double r : radius_grid()) {
    EXPECT_NEAR(map.phi(r), std::sqrt(2.0 * (std::cosh(r) - 1.0)), 1e-10) << r;
  }
  EXPECT_NEAR(map.phi(1.0), 1.04219061098749, 1e-13);
}

TEST(SqueezeMap, PhiIsFlatNearOrigin) {
  for (int v : {2, 3, 4}) {
    const SqueezeMap map(v, 1.0);
    for (double r : {1e-4, 1e-3, 5e-3, 1e-2}) {
      EXPECT_LE(std::abs(map.phi(r) - r), r * r * r) << "v=" << v << " r=" << r;
    }
  }
}

TEST(SqueezeMap, InverseRoundTrip) {
  const SqueezeMap map(2, 1.0);
  EXPECT_EQ(map.f(0.0), 0.0);
  EXPECT_NEAR(map.f(map.phi(1.0)), 1.0, 1e-12);
  EXPECT_LT(map.f(2.0), 2.0);
  EXPECT_NEAR(map.f(2.0), 1.76274717403909, 1e-12);
  for (double r : radius_grid()) {
    EXPECT_NEAR(map.f(r), testing::squeeze_f_v2(1.0, r), 1e-12 * (1.0 + r));
  }
}

TEST(SqueezeMap, DerivativeValues) {
  const SqueezeMap map(2, 1.0);
  EXPECT_EQ(map.f_prime(0.0), 1.0);
  EXPECT_NEAR(map.f_prime(1e-6), 1.0, 1e-10);
  const double at_one = map.f_prime(1.0);
  EXPECT_GT(at_one, 0.0);
  EXPECT_LT(at_one, 1.0);
  // 1 / sqrt(1 + r^2/4) for v = 2, c = 1.
  EXPECT_NEAR(at_one, 0.894427190999916, 1e-12);
}

TEST(SqueezeMap, DerivativeAgreesWithCentralDifference) {
  constexpr double h = 1e-4;
  for (int v : {2, 3, 4}) {
    for (double c : {0.1, 0.5, 1.0}) {
      const SqueezeMap map(v, c);
      for (double r : {0.5, 1.0, 2.0, 5.0}) {
        const double fd = (map.f(r + h) - map.f(r - h)) / (2.0 * h);
        EXPECT_LE(std::abs(map.f_prime(r) - fd), 1e-6) << "v=" << v << " c=" << c << " r=" << r;
      }
    }
  }
}

TEST(SqueezeMap, VolumePreservationAndContraction) {
  for (int v : {2, 3, 4}) {
    for (double c : {0.1, 0.5, 1.0}) {
      const SqueezeMap map(v, c);
      double previous = 0.0;
      for (double r : radius_grid()) {
        const SqueezeEvaluation e = map.evaluate(r);
        const double euclidean = std::pow(r, v) / v;
        const double hyperbolic = testing::sinh_power_integral(v, c, e.f_of_r);
        EXPECT_LE(std::abs(euclidean - hyperbolic), 1e-8 * (1.0 + std::pow(r, v)))
            << "v=" << v << " c=" << c << " r=" << r;
        EXPECT_LE(e.f_prime, 1.0 + 1e-10);
        EXPECT_GT(e.f_prime, 0.0);
        EXPECT_LE(e.f_of_r, r);
        EXPECT_GT(e.f_of_r, previous);
        EXPECT_LE(r, sh(c, e.f_of_r) + 1e-10 * (1.0 + r));
        EXPECT_GE(e.quad_error, 0.0);
        previous = e.f_of_r;
      }
    }
  }
}

TEST(SqueezeMap, RatioTendsToOneAtOrigin) {
  const SqueezeMap map(3, 1.0);
  EXPECT_NEAR(map.f(1e-4) / 1e-4, 1.0, 1e-8);
  EXPECT_NEAR(map.f(1e-2) / 1e-2, 1.0, 1e-4);
}

TEST(SqueezeMap, FlatLimit) {
  for (int v : {2, 3, 4}) {
    const SqueezeMap map(v, 1e-6);
    for (double r : radius_grid()) {
      EXPECT_LE(std::abs(map.f(r) - r), 1e-6 * r) << "v=" << v << " r=" << r;
    }
  }
  const SqueezeMap identity(3, 0.0);
  EXPECT_EQ(identity.f(2.5), 2.5);
  EXPECT_EQ(identity.f_prime(2.5), 1.0);
}

TEST(SqueezeMap, Preconditions) {
  EXPECT_THROW(SqueezeMap(1, 0.5), DomainError);
  EXPECT_THROW(SqueezeMap(2, 1.5), DomainError);
  EXPECT_THROW(SqueezeMap(2, 0.5, 0.0), DomainError);
  EXPECT_THROW(SqueezeMap(2, 0.5).f(-1.0), DomainError);
}

}  // namespace
}  // namespace yamabe
