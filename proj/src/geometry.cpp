#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

std::string describe(const CavityConfig& c) {
  std::ostringstream os;
  os.precision(6);
  os << "(a=" << c.a << ", R=" << c.R << ", L=" << c.L << ", phi=" << c.phi
     << ", dx=" << c.dx << ")";
  return os.str();
}

double checked_acos(double x) {
  if (!(std::abs(x) <= 1.0 + kAcosTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "arccos argument " << x << " outside [-1, 1]";
    fail(ErrorCode::NumericalDomain, os.str());
  }
  return std::acos(std::clamp(x, -1.0, 1.0));
}

void check_r(const ValidatedConfig& config, double r) {
  if (!(r >= 0.0 && r <= config.R())) {
    std::ostringstream os;
    os << "wing coordinate r=" << r << " outside [0, " << config.R() << "]";
    fail(ErrorCode::InvalidArgument, os.str());
  }
  if (config.is_triangle() && r == 0.0) {
    fail(ErrorCode::SingularSeparation, "r = 0 is the apex of a triangle cavity");
  }
}

// Angles at a point of the upper wing when the opposite wing starts at
// (-shift, -a). Both are measured from the upper wing direction.
LimitAngles shifted_limit_angles(double a, double R, double phi, double shift, double r) {
  const double sin_phi = std::sin(phi);
  const double cos_phi = std::cos(phi);

  const double far_dz = a + (R + r) * sin_phi;
  const double far_dx = shift + (r - R) * cos_phi;
  const double far_len = std::sqrt(far_dz * far_dz + far_dx * far_dx);
  const double far_num = r + a * sin_phi + shift * cos_phi - R * std::cos(2.0 * phi);

  const double near_len = std::sqrt(a * a + shift * shift + r * r + 2.0 * a * r * sin_phi +
                                    2.0 * shift * r * cos_phi);
  const double near_num = r + a * sin_phi + shift * cos_phi;

  return {checked_acos(far_num / -far_len), checked_acos(near_num / -near_len)};
}

}  // namespace

std::string_view to_string(WingSide side) noexcept {
  return side == WingSide::right ? "right" : "left";
}

WingSide other(WingSide side) noexcept {
  return side == WingSide::right ? WingSide::left : WingSide::right;
}

ValidatedConfig validate(const CavityConfig& c) {
  if (!std::isfinite(c.a) || !std::isfinite(c.R) || !std::isfinite(c.L) ||
      !std::isfinite(c.phi) || !std::isfinite(c.dx)) {
    fail(ErrorCode::InvalidArgument, "non-finite parameter in " + describe(c));
  }
  if (c.R <= 0.0 || c.L <= 0.0) {
    fail(ErrorCode::NonPositiveDimension, "R and L must be positive in " + describe(c));
  }
  if (c.a < 0.0 || c.dx < 0.0) {
    fail(ErrorCode::NonPositiveDimension, "a and dx must be non-negative in " + describe(c));
  }
  if (c.a == 0.0 && c.dx > 0.0) {
    fail(ErrorCode::DegenerateTriangle, "a = 0 requires dx = 0 in " + describe(c));
  }
  if (c.phi < 0.0) {
    fail(ErrorCode::AngleOutOfRange, "phi must be non-negative in " + describe(c));
  }
  if (c.dx == 0.0) {
    if (c.phi >= std::numbers::pi / 2.0) {
      fail(ErrorCode::AngleOutOfRange, "phi must be below pi/2 in " + describe(c));
    }
  } else {
    // arccot(dx / a) for dx, a > 0
    const double limit = std::atan2(c.a, c.dx);
    if (c.phi > limit) {
      std::ostringstream os;
      os.precision(6);
      os << "phi exceeds arccot(dx/a) = " << limit << " in " << describe(c);
      fail(ErrorCode::AngleOutOfRange, os.str());
    }
  }
  return ValidatedConfig(c);
}

PointSet point_set(const ValidatedConfig& config, double r, WingSide side) {
  if (!(r >= 0.0 && r <= config.R())) {
    fail(ErrorCode::InvalidArgument, "wing coordinate outside [0, R]");
  }
  const double a = config.a();
  const double R = config.R();
  const double dx = config.dx();
  const double c = std::cos(config.phi());
  const double s = std::sin(config.phi());

  if (side == WingSide::right) {
    return {{0.0, 0.0}, {r * c, r * s}, {R * c - dx, -R * s - a}, {-dx, -a}};
  }
  return {{0.0, 0.0}, {r * c - dx, -r * s - a}, {R * c, R * s}, {-dx, -a}};
}

LimitAngles limit_angles_right(const ValidatedConfig& config, double r) {
  check_r(config, r);
  return shifted_limit_angles(config.a(), config.R(), config.phi(), config.dx(), r);
}

LimitAngles limit_angles_left(const ValidatedConfig& config, double r) {
  check_r(config, r);
  return shifted_limit_angles(config.a(), config.R(), config.phi(), -config.dx(), r);
}

LimitAngles limit_angles(const ValidatedConfig& config, double r, WingSide side) {
  return side == WingSide::right ? limit_angles_right(config, r) : limit_angles_left(config, r);
}

double s_parameter(const ValidatedConfig& config, double r, double theta2) {
  const double phi = config.phi();
  const double denom = std::sin(phi - theta2);
  if (!(std::abs(denom) >= 1e-15)) {
    fail(ErrorCode::SingularSeparation, "sin(phi - theta2) vanishes");
  }
  const double s = std::sin(2.0 * phi - theta2) * (config.a() + r * std::sin(phi)) / denom;
  if (!(s > 0.0) || !std::isfinite(s)) {
    fail(ErrorCode::SingularSeparation, "separation parameter is not positive");
  }
  return s;
}

}  // namespace casimir
