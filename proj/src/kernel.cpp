#include "casimir/kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

// Antiderivatives in t, each scaled by 240.
double a2_antiderivative(double phi, double t) noexcept {
  return -90.0 * std::sin(phi - t) + 60.0 * std::sin(3.0 * phi - t) +
         20.0 * std::sin(5.0 * phi - 3.0 * t) - 5.0 * std::sin(7.0 * phi - 3.0 * t) -
         3.0 * std::sin(9.0 * phi - 5.0 * t);
}

double a1_antiderivative(double phi, double t) noexcept {
  return -90.0 * std::cos(phi - t) - 60.0 * std::cos(3.0 * phi - t) +
         20.0 * std::cos(5.0 * phi - 3.0 * t) + 5.0 * std::cos(7.0 * phi - 3.0 * t) -
         3.0 * std::cos(9.0 * phi - 5.0 * t);
}

double pow4(double x) noexcept {
  const double x2 = x * x;
  return x2 * x2;
}

constexpr quad::Tolerance kOracleTolerance{1e-13, 0.0, std::size_t{1} << 20};

// Below this the antiderivative difference (terms of order 100/240) has lost
// too many digits; the force integrals then see rounding noise instead of a
// smooth curve, e.g. for wings shifted far past each other.
constexpr double kCancellationThreshold = 1e-3;

// Four fixed Gauss-Kronrod panels. The integrands are trigonometric
// polynomials of frequency <= 5, so this is accurate to rounding for any
// sub-interval of [0, pi] and keeps full relative precision near zeros.
KernelValue kernel_panels(double phi, double theta1, double theta2) {
  auto f = [phi](double t) {
    const double w = pow4(std::sin(t - 2.0 * phi));
    return std::array<double, 2>{w * std::sin(t - phi), w * std::cos(t - phi)};
  };
  KernelValue k;
  const double h = (theta2 - theta1) / 4.0;
  for (int i = 0; i < 4; ++i) {
    const double lo = theta1 + h * i;
    const double hi = i == 3 ? theta2 : lo + h;
    const auto seg = quad::detail::gauss_kronrod<2>(f, lo, hi);
    k.a1 += seg.value[0];
    k.a2 += seg.value[1];
  }
  return k;
}

}  // namespace

double casimir_prefactor() noexcept {
  return PhysicalConstants::hbar * PhysicalConstants::c * std::numbers::pi * std::numbers::pi /
         240.0;
}

double a2_closed(double phi, double theta1, double theta2) noexcept {
  return (a2_antiderivative(phi, theta2) - a2_antiderivative(phi, theta1)) / 240.0;
}

double a1_closed(double phi, double theta1, double theta2) noexcept {
  return (a1_antiderivative(phi, theta2) - a1_antiderivative(phi, theta1)) / 240.0;
}

KernelValue kernel_closed(double phi, double theta1, double theta2) noexcept {
  return {a1_closed(phi, theta1, theta2), a2_closed(phi, theta1, theta2)};
}

KernelValue kernel(double phi, double theta1, double theta2) {
  KernelValue k = kernel_closed(phi, theta1, theta2);
  if (std::abs(k.a1) < kCancellationThreshold || std::abs(k.a2) < kCancellationThreshold) {
    const KernelValue q = kernel_panels(phi, theta1, theta2);
    if (std::abs(k.a1) < kCancellationThreshold) k.a1 = q.a1;
    if (std::abs(k.a2) < kCancellationThreshold) k.a2 = q.a2;
  }
  return k;
}

double a1_quad(double phi, double theta1, double theta2) {
  if (theta1 > theta2) throw Error(ErrorCode::InvalidArgument, "a1_quad requires theta1 <= theta2");
  auto f = [phi](double t) { return pow4(std::sin(t - 2.0 * phi)) * std::sin(t - phi); };
  return quad::integrate_scalar(f, theta1, theta2, kOracleTolerance).value[0];
}

double a2_quad(double phi, double theta1, double theta2) {
  if (theta1 > theta2) throw Error(ErrorCode::InvalidArgument, "a2_quad requires theta1 <= theta2");
  auto f = [phi](double t) { return pow4(std::sin(t - 2.0 * phi)) * std::cos(t - phi); };
  return quad::integrate_scalar(f, theta1, theta2, kOracleTolerance).value[0];
}

SpecificForce specific_force(const ValidatedConfig& config, double r, WingSide side) {
  const LimitAngles angles = limit_angles(config, r, side);
  const double s = s_parameter(config, r, angles.theta2);
  const KernelValue k = kernel(config.phi(), angles.theta1, angles.theta2);
  const double scale = -casimir_prefactor() / pow4(s);
  return {scale * k.a2, scale * k.a1, r, side};
}

double classical_casimir_pressure(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::NonPositiveSeparation, "plate separation must be positive");
  return -casimir_prefactor() / pow4(a);
}

}  // namespace casimir
