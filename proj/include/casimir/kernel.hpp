#pragma once

#include "casimir/geometry.hpp"

namespace casimir {

/// CODATA 2018 values; not configurable.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double c = 299792458.0;         // m/s
};

/// hbar c pi^2 / 240, the prefactor of the parallel-plate pressure (N m^2).
double casimir_prefactor() noexcept;

struct KernelValue {
  double a1 = 0.0;  // z kernel, integral of sin(t - 2 phi)^4 sin(t - phi)
  double a2 = 0.0;  // x kernel, integral of sin(t - 2 phi)^4 cos(t - phi)
};

/// Closed-form integral of sin(t - 2 phi)^4 cos(t - phi) over [theta1, theta2].
double a2_closed(double phi, double theta1, double theta2) noexcept;

/// Closed-form integral of sin(t - 2 phi)^4 sin(t - phi) over [theta1, theta2].
double a1_closed(double phi, double theta1, double theta2) noexcept;

KernelValue kernel_closed(double phi, double theta1, double theta2) noexcept;

/// Kernel used on the force path: the closed forms, except that a component
/// smaller than 1e-3 in magnitude is recomputed with a fixed Gauss-Kronrod
/// rule, where the closed form would cancel catastrophically.
KernelValue kernel(double phi, double theta1, double theta2);

// Quadrature of the raw integrands (absolute tolerance 1e-13). These are the
// independent check on the closed forms and are not used on the force path.
double a1_quad(double phi, double theta1, double theta2);
double a2_quad(double phi, double theta1, double theta2);

/// Local specific force at one wing point. p_x is along the x axis; p_z is the
/// normal component in the wing's own frame, negative meaning compression
/// toward the opposite wing (for the left wing this is +z globally).
struct SpecificForce {
  double p_x = 0.0;  // N/m^2
  double p_z = 0.0;  // N/m^2
  double r = 0.0;
  WingSide side = WingSide::right;
};

SpecificForce specific_force(const ValidatedConfig& config, double r, WingSide side);

/// -hbar c pi^2 / (240 a^4).
double classical_casimir_pressure(double a);

}  // namespace casimir
