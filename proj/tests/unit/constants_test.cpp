#include "yamabe/constants.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "yamabe/errors.hpp"

namespace yamabe {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(GammaFunction, KnownValues) {
  EXPECT_DOUBLE_EQ(gamma_function(1.0), 1.0);
  EXPECT_NEAR(gamma_function(0.5), std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(gamma_function(0.5), 1.7724538509055159, 1e-15);
  // 1.5 * 0.5 * sqrt(pi)
  EXPECT_NEAR(gamma_function(2.5), 1.3293403881791370, 1e-15);
}

TEST(GammaFunction, MatchesLibmOnHalfOpenRange) {
  for (double x = 0.5; x <= 30.0; x += 0.0371) {
    const double expected = std::tgamma(x);
    EXPECT_NEAR(gamma_function(x) / expected, 1.0, 1e-13) << "x = " << x;
  }
}

TEST(GammaFunction, Recurrence) {
  for (double x = 0.5; x <= 15.0; x += 0.5) {
    EXPECT_NEAR(gamma_function(x + 1.0) / (x * gamma_function(x)), 1.0, 1e-12) << "x = " << x;
  }
  // Off the half-integer lattice the Lanczos branch is used.
  for (double x = 0.3; x <= 15.0; x += 0.7) {
    EXPECT_NEAR(gamma_function(x + 1.0) / (x * gamma_function(x)), 1.0, 1e-12) << "x = " << x;
  }
}

TEST(GammaFunction, RejectsNonPositive) {
  EXPECT_THROW(gamma_function(0.0), DomainError);
  EXPECT_THROW(gamma_function(-1.5), DomainError);
  EXPECT_THROW(gamma_function(NAN), DomainError);
}

TEST(SphereVolume, ClosedForms) {
  EXPECT_NEAR(sphere_volume(1), 2.0 * kPi, 1e-14);
  EXPECT_NEAR(sphere_volume(3), 2.0 * kPi * kPi, 1e-13);
  EXPECT_NEAR(sphere_volume(3), 19.7392088021787, 1e-12);
  EXPECT_NEAR(sphere_volume(8), 32.0 * std::pow(kPi, 4) / (7 * 5 * 3), 1e-13);
  EXPECT_NEAR(sphere_volume(8), 29.6865801246484, 1e-12);
  EXPECT_NEAR(sphere_volume(11), std::pow(kPi, 6) / 60.0, 1e-13);
  EXPECT_THROW(sphere_volume(0), DomainError);
}

TEST(SphereVolume, DimensionRecurrence) {
  for (int w = 3; w <= 20; ++w) {
    const double expected = sphere_volume(w - 2) * 2.0 * kPi / (w - 1);
    EXPECT_NEAR(sphere_volume(w) / expected, 1.0, 1e-12) << "w = " << w;
  }
}

TEST(SphereYamabe, PublishedValues) {
  EXPECT_NEAR(sphere_yamabe(5), 78.996, 1e-3);
  EXPECT_NEAR(sphere_yamabe(9), 147.87, 1e-2);
  EXPECT_NEAR(sphere_yamabe(10), 165.02, 1e-2);
  // mpmath, 30 digits
  EXPECT_NEAR(sphere_yamabe(3), 43.8232327162506550, 1e-12);
  EXPECT_NEAR(sphere_yamabe(4), 61.5623918477694766, 1e-12);
  EXPECT_NEAR(sphere_yamabe(11), 182.153606133180251, 1e-11);
  EXPECT_THROW(sphere_yamabe(2), DomainError);
}

TEST(SphereYamabe, StrictlyIncreasing) {
  for (int n = 4; n <= 20; ++n) {
    EXPECT_GT(sphere_yamabe(n), sphere_yamabe(n - 1)) << "n = " << n;
  }
}

TEST(SphereConstant, SatisfiesDefiningIdentity) {
  for (int n = 3; n <= 12; ++n) {
    const SphereConstant s = sphere_constant(n);
    EXPECT_GT(s.volume, 0.0);
    EXPECT_NEAR(s.yamabe, n * (n - 1.0) * std::pow(s.volume, 2.0 / n), 1e-12 * s.yamabe);
  }
}

TEST(DimensionalConstants, Values) {
  EXPECT_DOUBLE_EQ(yamabe_coefficient(6), 5.0);
  EXPECT_DOUBLE_EQ(critical_exponent(6), 3.0);
  EXPECT_DOUBLE_EQ(yamabe_coefficient(3), 8.0);
  EXPECT_DOUBLE_EQ(critical_exponent(4), 4.0);
  EXPECT_THROW(yamabe_coefficient(2), DomainError);
  EXPECT_THROW(critical_exponent(1), DomainError);
}

TEST(DimensionalConstants, MonotoneLimits) {
  for (int n = 4; n <= 200; ++n) {
    EXPECT_LT(yamabe_coefficient(n), yamabe_coefficient(n - 1));
    EXPECT_LT(critical_exponent(n), critical_exponent(n - 1));
    EXPECT_GT(yamabe_coefficient(n), 4.0);
    EXPECT_GT(critical_exponent(n), 2.0);
  }
  EXPECT_NEAR(yamabe_coefficient(100000), 4.0, 1e-4);
  EXPECT_NEAR(critical_exponent(100000), 2.0, 1e-4);
}

TEST(SpecialManifolds, WuManifold) {
  EXPECT_NEAR(wu_manifold_yamabe(), 64.252401, 1e-6);
  EXPECT_GT(wu_manifold_yamabe(), 64.0);
  EXPECT_LT(wu_manifold_yamabe(), sphere_yamabe(5));
}

TEST(SpecialManifolds, S3xS3) {
  EXPECT_NEAR(s3xs3_yamabe(), 87.64646, 1e-5);
  EXPECT_LT(s3xs3_yamabe(), sphere_yamabe(6));
  // scal(S^3 x S^3) = 12, volume = vol(S^3)^2, n = 6
  EXPECT_NEAR(s3xs3_yamabe(), 12.0 * std::pow(sphere_volume(3), 2.0 / 3.0), 1e-12);
}

TEST(SpecialManifolds, QuaternionicProjectivePlane) {
  const double v8 = hp_normalized_volume(2);
  EXPECT_NEAR(v8, std::pow(2.0, 13) * std::pow(kPi, 4) / (2401.0 * 5 * 3), 1e-12);
  EXPECT_NEAR(v8, 22.1567478481341, 1e-12);
  EXPECT_NEAR(v8 / sphere_volume(8), 256.0 / 343.0, 1e-14);
  EXPECT_NEAR(v8 / sphere_volume(8), 0.74635569, 1e-8);
  EXPECT_NEAR(std::pow(v8 / sphere_volume(8), 2.0 / 9.0), 0.93706, 1e-5);
  EXPECT_THROW(hp_normalized_volume(0), DomainError);
}

}  // namespace
}  // namespace yamabe
