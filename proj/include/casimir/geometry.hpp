#pragma once

#include <string_view>

namespace casimir {

/// Trapezoid cavity cross-section in the (x, z) plane. The right wing starts at
/// the origin and rises at angle phi; the left wing starts at (-dx, -a) and
/// descends at angle phi. Lengths in metres, angles in radians.
struct CavityConfig {
  double a = 0.0;    // separation at the narrow end
  double R = 0.0;    // wing length
  double L = 1.0;    // extent along y
  double phi = 0.0;  // half-opening of each wing
  double dx = 0.0;   // shift of the left wing against the x axis
};

enum class WingSide { right, left };

std::string_view to_string(WingSide side) noexcept;
WingSide other(WingSide side) noexcept;

/// Relative start of the r-integration when a = 0. The apex r = 0 is excluded
/// because the separation parameter vanishes there.
inline constexpr double kApexCutoff = 1e-9;

/// Tolerance for arccos arguments that overshoot [-1, 1] through rounding.
inline constexpr double kAcosTolerance = 1e-12;

/// A configuration that satisfied every geometric invariant. Only `validate`
/// constructs one.
class ValidatedConfig {
 public:
  const CavityConfig& config() const noexcept { return config_; }
  double a() const noexcept { return config_.a; }
  double R() const noexcept { return config_.R; }
  double L() const noexcept { return config_.L; }
  double phi() const noexcept { return config_.phi; }
  double dx() const noexcept { return config_.dx; }

  bool is_triangle() const noexcept { return config_.a == 0.0; }

  /// First admissible wing coordinate: 0, or kApexCutoff * R for a triangle.
  double r_min() const noexcept { return is_triangle() ? kApexCutoff * config_.R : 0.0; }

 private:
  explicit ValidatedConfig(const CavityConfig& c) : config_(c) {}
  friend ValidatedConfig validate(const CavityConfig& config);

  CavityConfig config_;
};

/// Checks a >= 0, R > 0, L > 0, dx >= 0, a = 0 only with dx = 0, and
/// 0 <= phi <= arccot(dx / a) (phi < pi/2 when unshifted).
ValidatedConfig validate(const CavityConfig& config);

struct Point {
  double x = 0.0;
  double z = 0.0;
};

/// Points spanning the virtual rays from M1 on one wing: M0 origin, M1 the
/// evaluation point, M2 and M3 the ends used in the limit-angle cosines.
struct PointSet {
  Point m0;
  Point m1;
  Point m2;
  Point m3;
};

struct LimitAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

PointSet point_set(const ValidatedConfig& config, double r, WingSide side);

/// Limit angles at distance r along the right wing, with the left wing
/// shifted by dx.
LimitAngles limit_angles_right(const ValidatedConfig& config, double r);

/// Limit angles at distance r along the left wing. The left wing sees the
/// right one shifted forward by dx, so these are the right-wing expressions
/// with dx -> -dx.
LimitAngles limit_angles_left(const ValidatedConfig& config, double r);

LimitAngles limit_angles(const ValidatedConfig& config, double r, WingSide side);

/// Effective separation s = sin(2 phi - theta2) (a + r sin phi) / sin(phi - theta2).
double s_parameter(const ValidatedConfig& config, double r, double theta2);

}  // namespace casimir
