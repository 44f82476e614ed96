#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casimir/error.hpp"
#include "casimir/kernel.hpp"
#include "oracles.hpp"

using namespace casimir;
namespace ct = casimir::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Kernel, ParallelPlateValues) {
  // phi = 0, full half-turn: integral of sin^5 is 16/15, of sin^4 cos is 0
  EXPECT_NEAR(a1_closed(0.0, 0.0, kPi), 16.0 / 15.0, 1e-14);
  EXPECT_NEAR(a2_closed(0.0, 0.0, kPi), 0.0, 1e-14);
  // half-open: sin^4 cos over [0, pi/2] = 1/5
  EXPECT_NEAR(a2_closed(0.0, 0.0, kPi / 2), 0.2, 1e-14);
  EXPECT_NEAR(a1_closed(0.0, 0.0, kPi / 2), 8.0 / 15.0, 1e-14);
}

TEST(Kernel, EmptyIntervalIsZero) {
  EXPECT_EQ(a1_closed(0.3, 1.1, 1.1), 0.0);
  EXPECT_EQ(a2_closed(0.3, 1.1, 1.1), 0.0);
}

TEST(Kernel, ClosedMatchesTrapezoid) {
  // independent of the adaptive quadrature
  const double phi = 0.4, t1 = 0.2, t2 = 2.9;
  const auto f1 = [&](double t) { return std::pow(std::sin(t - 2 * phi), 4) * std::sin(t - phi); };
  const auto f2 = [&](double t) { return std::pow(std::sin(t - 2 * phi), 4) * std::cos(t - phi); };
  const double h1 = ct::trapezoid(f1, t1, t2, 4000), h2 = ct::trapezoid(f1, t1, t2, 8000);
  const double g1 = ct::trapezoid(f2, t1, t2, 4000), g2 = ct::trapezoid(f2, t1, t2, 8000);
  EXPECT_NEAR(a1_closed(phi, t1, t2), (4 * h2 - h1) / 3, 1e-11);
  EXPECT_NEAR(a2_closed(phi, t1, t2), (4 * g2 - g1) / 3, 1e-11);
}

TEST(Kernel, ClosedMatchesQuadratureRandom) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> phi(0.0, kPi / 4), th(0.0, kPi);
  for (int i = 0; i < 500; ++i) {
    const double p = phi(rng);
    double t1 = th(rng), t2 = th(rng);
    if (t1 > t2) std::swap(t1, t2);
    EXPECT_NEAR(a1_closed(p, t1, t2), a1_quad(p, t1, t2), 1e-12);
    EXPECT_NEAR(a2_closed(p, t1, t2), a2_quad(p, t1, t2), 1e-12);
  }
}

TEST(Kernel, ClosedIsOrientedInterval) {
  EXPECT_NEAR(a1_closed(0.2, 2.0, 0.5), -a1_closed(0.2, 0.5, 2.0), 1e-15);
  EXPECT_NEAR(a2_closed(0.2, 2.0, 0.5), -a2_closed(0.2, 0.5, 2.0), 1e-15);
}

TEST(Kernel, QuadratureRejectsReversedBounds) {
  try {
    a1_quad(0.1, 2.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Kernel, Prefactor) {
  EXPECT_NEAR(casimir_prefactor(), 1.054571817e-34 * 299792458.0 * kPi * kPi / 240.0, 1e-40);
}

TEST(Kernel, ClassicalPressure) {
  const double a = 1e-6;
  EXPECT_NEAR(classical_casimir_pressure(a) / -1.3001e-3, 1.0, 1e-3);
  EXPECT_THROW(classical_casimir_pressure(0.0), Error);
  try {
    classical_casimir_pressure(-1.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveSeparation);
  }
}

TEST(SpecificForce, MidPlaneOfLongPlatesIsClassical) {
  const double a = 4e-7;
  const auto v = validate({a, 1000 * a, 1.0, 0.0, 0.0});
  const auto p = specific_force(v, 500 * a, WingSide::right);
  const double classical = classical_casimir_pressure(a);
  // the z kernel saturates at 16/15 in the middle, so 16/15 * K/a^4 * ... ->
  // p_z / classical = A1 integrated over nearly the whole half-turn
  EXPECT_NEAR(p.p_z / (classical * a1_closed(0.0, 0.0, kPi)), 1.0, 1e-5);
  EXPECT_NEAR(p.p_x / classical, 0.0, 1e-5);
}

TEST(SpecificForce, UnshiftedWingsAreMirrorImages) {
  ct::ConfigSampler sample(22);
  for (int i = 0; i < 100; ++i) {
    const auto c = sample(false);
    const auto v = validate(c);
    const double r = sample.uniform(0.0, c.R);
    const auto right = specific_force(v, r, WingSide::right);
    const auto left = specific_force(v, r, WingSide::left);
    EXPECT_DOUBLE_EQ(right.p_x, left.p_x);
    EXPECT_DOUBLE_EQ(right.p_z, left.p_z);
  }
}

TEST(SpecificForce, ParallelPlateSymmetryAcrossWings) {
  // at phi = 0 the left wing at r sees what the right wing sees at R - r
  const double a = 4e-7;
  const auto v = validate({a, 10 * a, 1.0, 0.0, 1.5 * a});
  for (double q : {0.0, 0.1, 0.37, 0.8, 1.0}) {
    const double r = q * 10 * a;
    const auto left = specific_force(v, r, WingSide::left);
    const auto right = specific_force(v, 10 * a - r, WingSide::right);
    EXPECT_NEAR(left.p_z / right.p_z, 1.0, 1e-9) << q;
  }
}

TEST(Kernel, ForcePathKeepsRelativePrecisionNearZeros) {
  // narrow windows next to t = 2 phi, where the integrand vanishes like t^4
  for (double phi : {0.0, 0.017, 0.3}) {
    for (double w : {1e-3, 1e-2, 5e-2}) {
      const double t1 = 2 * phi + 0.1 * w, t2 = t1 + w;
      const auto k = kernel(phi, t1, t2);
      EXPECT_NEAR(k.a1 / a1_quad(phi, t1, t2), 1.0, 1e-9) << phi << " " << w;
      EXPECT_NEAR(k.a2 / a2_quad(phi, t1, t2), 1.0, 1e-9) << phi << " " << w;
    }
  }
  // and agrees with the closed forms where they are well conditioned
  const auto k = kernel(0.2, 0.5, 2.5);
  EXPECT_DOUBLE_EQ(k.a1, a1_closed(0.2, 0.5, 2.5));
  EXPECT_NEAR(kernel(0.2, 0.3, 0.31).a2, a2_closed(0.2, 0.3, 0.31), 1e-15);
}
