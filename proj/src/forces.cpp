#include "casimir/forces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/error.hpp"
#include "casimir/kernel.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

struct WingIntegral {
  WingForce force;
  double moment = 0.0;  // per unit width, about the configuration centroid
  double moment_error = 0.0;
};

// Integrates (p_x, p_z, moment density / R) along one wing. The moment is
// scaled by 1/R so that all three components share the force tolerance.
WingIntegral integrate_wing_moments(const ValidatedConfig& config, WingSide side) {
  const double a = config.a();
  const double R = config.R();
  const double dx = config.dx();
  const double cos_phi = std::cos(config.phi());
  const double sin_phi = std::sin(config.phi());
  const double x_bar = 0.5 * R * cos_phi - 0.5 * dx;
  const double z_bar = -0.5 * a;

  auto integrand = [&](double r) -> std::array<double, 3> {
    const SpecificForce p = specific_force(config, r, side);
    double x = r * cos_phi;
    double z = r * sin_phi;
    double pz_global = p.p_z;
    if (side == WingSide::left) {
      x -= dx;
      z = -a - z;
      pz_global = -p.p_z;
    }
    const double moment = ((x - x_bar) * pz_global - (z - z_bar) * p.p_x) / R;
    return {p.p_x, p.p_z, moment};
  };

  const double L = config.L();
  const quad::Tolerance tol{kForceAbsoluteFloor / L, kForceRelativeTolerance,
                            std::size_t{1} << 20};
  const auto res = quad::integrate<3>(integrand, config.r_min(), R, tol);

  WingIntegral out;
  out.force.f_x = L * res.value[0];
  out.force.f_z = L * res.value[1];
  out.force.side = side;
  out.force.quadrature_error = L * std::max(res.error[0], res.error[1]);
  out.moment = R * res.value[2];
  out.moment_error = R * res.error[2];
  return out;
}

double effectiveness_at(const ValidatedConfig& base, double R, ForceScope scope) {
  return expulsion_effectiveness(with_wing_length(base, R), scope);
}

}  // namespace

ValidatedConfig with_wing_length(const ValidatedConfig& config, double R) {
  CavityConfig c = config.config();
  c.R = R;
  return validate(c);
}

std::vector<std::size_t> local_maxima(std::span<const double> values) {
  std::vector<std::size_t> peaks;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i;
    while (j + 1 < n && values[j + 1] == values[i]) ++j;
    const bool above_left = i == 0 || values[i] > values[i - 1];
    const bool above_right = j + 1 == n || values[i] > values[j + 1];
    // a constant curve has no maximum
    if (above_left && above_right && !(i == 0 && j + 1 == n)) peaks.push_back(i);
    i = j;
  }
  return peaks;
}

ForceProfile force_profile(const ValidatedConfig& config, WingSide side, std::size_t n_samples) {
  if (n_samples < 2) throw Error(ErrorCode::InvalidArgument, "a profile needs at least 2 samples");

  ForceProfile profile;
  profile.side = side;
  profile.config = config.config();
  profile.samples.reserve(n_samples);

  const double lo = config.r_min();
  const double R = config.R();
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n_samples - 1);
    const double r = i + 1 == n_samples ? R : lo + (R - lo) * t;
    try {
      const SpecificForce p = specific_force(config, r, side);
      profile.samples.push_back({r / R, p.p_x, p.p_z});
    } catch (const Error& e) {
      std::ostringstream os;
      os.precision(17);
      os << "profile sample at r=" << r << " failed: " << e.what();
      throw Error(e.code(), os.str());
    }
  }
  return profile;
}

WingForce integrate_wing(const ValidatedConfig& config, WingSide side) {
  return integrate_wing_moments(config, side).force;
}

TotalForce total_force(const ValidatedConfig& config) {
  const WingIntegral right = integrate_wing_moments(config, WingSide::right);
  const WingIntegral left = integrate_wing_moments(config, WingSide::left);

  TotalForce total;
  total.per_wing = {right.force, left.force};
  total.f_x_total = right.force.f_x + left.force.f_x;
  total.f_z_total = right.force.f_z + left.force.f_z;
  total.torque_y = right.moment + left.moment;
  total.torque_error = right.moment_error + left.moment_error;
  return total;
}

double expulsion_force(const ValidatedConfig& config, ForceScope scope) {
  if (scope == ForceScope::right_wing) return integrate_wing(config, WingSide::right).f_x;
  return total_force(config).f_x_total;
}

double expulsion_effectiveness(const ValidatedConfig& config, ForceScope scope) {
  return std::abs(expulsion_force(config, scope)) / config.R();
}

double force_ratio(const ValidatedConfig& config, ForceScope scope) {
  double f_x = 0.0;
  double f_z = 0.0;
  if (scope == ForceScope::right_wing) {
    const WingForce w = integrate_wing(config, WingSide::right);
    f_x = w.f_x;
    f_z = w.f_z;
  } else {
    const TotalForce t = total_force(config);
    f_x = t.f_x_total;
    f_z = t.f_z_total;
  }
  if (f_z == 0.0) throw Error(ErrorCode::DivisionByZeroForce, "compression force is zero");
  return f_x / f_z;
}

EffectivenessResult find_reff(const ValidatedConfig& config, double r_min, double r_max,
                              ForceScope scope) {
  if (!(r_min > 0.0 && r_max > r_min && std::isfinite(r_max))) {
    throw Error(ErrorCode::InvalidBracket, "find_reff needs 0 < r_min < r_max");
  }

  const double log_lo = std::log(r_min);
  const double log_hi = std::log(r_max);
  const std::size_t n = kReffScanPoints;
  std::vector<double> grid(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    grid[i] = i == 0 ? r_min : i + 1 == n ? r_max : std::exp(log_lo + (log_hi - log_lo) * t);
    w[i] = effectiveness_at(config, grid[i], scope);
  }

  const std::vector<std::size_t> peaks = local_maxima(w);

  if (peaks.size() > 1) {
    std::vector<double> candidates;
    for (std::size_t p : peaks) candidates.push_back(grid[p]);
    std::ostringstream os;
    os << "effectiveness has " << peaks.size() << " separated local maxima on the bracket";
    throw NotUnimodalError(std::move(candidates), os.str());
  }
  if (peaks.empty()) throw Error(ErrorCode::InvalidBracket, "effectiveness scan found no maximum");
  const std::size_t peak = peaks.front();
  if (peak == 0 || peak + 1 == n) {
    throw Error(ErrorCode::InvalidBracket, "effectiveness maximum lies on the bracket edge");
  }

  // Golden-section maximisation in log R on the cell pair around the peak.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(grid[peak - 1]);
  double hi = std::log(grid[peak + 1]);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double w1 = effectiveness_at(config, std::exp(x1), scope);
  double w2 = effectiveness_at(config, std::exp(x2), scope);
  while (hi - lo > kReffTolerance) {
    if (w1 < w2) {
      lo = x1;
      x1 = x2;
      w1 = w2;
      x2 = lo + inv_phi * (hi - lo);
      w2 = effectiveness_at(config, std::exp(x2), scope);
    } else {
      hi = x2;
      x2 = x1;
      w2 = w1;
      x1 = hi - inv_phi * (hi - lo);
      w1 = effectiveness_at(config, std::exp(x1), scope);
    }
  }

  const double r_eff = std::exp(0.5 * (lo + hi));
  const ValidatedConfig at = with_wing_length(config, r_eff);
  const double f = expulsion_force(at, scope);
  return {std::abs(f) / r_eff, r_eff, f};
}

}  // namespace casimir
