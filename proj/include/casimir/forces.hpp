#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "casimir/geometry.hpp"

namespace casimir {

/// Integrated force on one wing. f_z is the compression in the wing's own
/// frame (see SpecificForce).
struct WingForce {
  double f_x = 0.0;               // N
  double f_z = 0.0;               // N
  WingSide side = WingSide::right;
  double quadrature_error = 0.0;  // N, estimated absolute error
};

struct TotalForce {
  double f_x_total = 0.0;
  double f_z_total = 0.0;
  std::array<WingForce, 2> per_wing{};  // right, left
  /// Moment per unit width about the centroid of the two wing segments,
  /// positive anticlockwise in the (x, z) plane (N m / m).
  double torque_y = 0.0;
  double torque_error = 0.0;

  const WingForce& right() const noexcept { return per_wing[0]; }
  const WingForce& left() const noexcept { return per_wing[1]; }
};

struct ProfileSample {
  double r_over_R = 0.0;
  double p_x = 0.0;
  double p_z = 0.0;
};

struct ForceProfile {
  std::vector<ProfileSample> samples;
  WingSide side = WingSide::right;
  CavityConfig config;
};

/// Which force enters the effectiveness and ratio: the right wing alone (the
/// wing the shifted-configuration optimum is reported for) or the whole
/// configuration.
enum class ForceScope { right_wing, total };

struct EffectivenessResult {
  double w_x = 0.0;        // N/m
  double r_eff = 0.0;      // m
  double f_at_reff = 0.0;  // N, signed x force at r_eff
};

/// Relative tolerance of the r-integrals, applied to max(|f_x|, |f_z|).
inline constexpr double kForceRelativeTolerance = 1e-9;
/// Absolute floor of the r-integrals (N).
inline constexpr double kForceAbsoluteFloor = 1e-30;
/// Coarse log-spaced scan size used by find_reff.
inline constexpr std::size_t kReffScanPoints = 64;
/// Relative position tolerance of the golden-section refinement.
inline constexpr double kReffTolerance = 1e-4;

/// Uniform grid of n_samples points on [r_min, R].
ForceProfile force_profile(const ValidatedConfig& config, WingSide side, std::size_t n_samples);

WingForce integrate_wing(const ValidatedConfig& config, WingSide side);

/// Sum over both wings (right then left) plus the centroid torque.
TotalForce total_force(const ValidatedConfig& config);

/// Signed x force in the given scope.
double expulsion_force(const ValidatedConfig& config, ForceScope scope);

/// W_x = |F_x| / R.
double expulsion_effectiveness(const ValidatedConfig& config, ForceScope scope = ForceScope::total);

/// Maximises W_x over wing lengths in [r_min, r_max]: 64-point log scan, then
/// golden-section in log R. Throws NotUnimodalError when the scan finds more
/// than one separated local maximum.
EffectivenessResult find_reff(const ValidatedConfig& config, double r_min, double r_max,
                              ForceScope scope = ForceScope::total);

/// F_x / F_z in the given scope.
double force_ratio(const ValidatedConfig& config, ForceScope scope = ForceScope::total);

/// Indices of the strict local maxima of a sampled curve; a flat top counts
/// once (its first index). Endpoints count when they exceed their neighbour;
/// a constant curve has none.
std::vector<std::size_t> local_maxima(std::span<const double> values);

/// The same configuration with a different wing length, revalidated.
ValidatedConfig with_wing_length(const ValidatedConfig& config, double R);

}  // namespace casimir
