#include "casimir/app/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "casimir/kernel.hpp"

namespace casimir::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct OutputName {
  Output output;
  std::string_view name;
};

constexpr OutputName kOutputNames[] = {
    {Output::p_x, "p_x"},
    {Output::p_z, "p_z"},
    {Output::f_x, "f_x"},
    {Output::f_z, "f_z"},
    {Output::ratio, "ratio"},
    {Output::w_x, "w_x"},
    {Output::torque, "torque"},
    {Output::p_x_right, "p_x_right"},
    {Output::p_z_right, "p_z_right"},
    {Output::p_x_left, "p_x_left"},
    {Output::p_z_left, "p_z_left"},
    {Output::f_x_right, "f_x_right"},
    {Output::f_x_left, "f_x_left"},
    {Output::f_z_right, "f_z_right"},
    {Output::f_z_left, "f_z_left"},
    {Output::p_classical, "p_classical"},
    {Output::dx_over_R, "dx_over_R"},
};

bool needs_both_wings(const SweepSpec& spec) {
  for (Output o : spec.outputs) {
    switch (o) {
      case Output::torque:
      case Output::f_x_left:
      case Output::f_z_left:
        return true;
      case Output::f_x:
      case Output::f_z:
      case Output::ratio:
      case Output::w_x:
        if (spec.scope == ForceScope::total) return true;
        break;
      default:
        break;
    }
  }
  return false;
}

SweepRow evaluate_row(const SweepSpec& spec, double value) {
  SweepRow row;
  row.swept_value = value;
  row.values.assign(spec.outputs.size(), kNaN);

  try {
    const ValidatedConfig config = config_for(spec, value);
    const double r = spec.swept == Swept::r ? value : 0.0;

    const bool integrated =
        std::any_of(spec.outputs.begin(), spec.outputs.end(), is_integrated);
    std::optional<TotalForce> total;
    std::optional<WingForce> right;
    if (integrated) {
      if (needs_both_wings(spec)) {
        total = total_force(config);
        right = total->right();
        row.quadrature_error =
            std::max(total->right().quadrature_error, total->left().quadrature_error);
      } else {
        right = integrate_wing(config, WingSide::right);
        row.quadrature_error = right->quadrature_error;
      }
    }
    const bool scoped_total = spec.scope == ForceScope::total;
    auto scoped_fx = [&] { return scoped_total ? total->f_x_total : right->f_x; };
    auto scoped_fz = [&] { return scoped_total ? total->f_z_total : right->f_z; };

    std::optional<SpecificForce> at_side;
    std::optional<SpecificForce> at_right;
    std::optional<SpecificForce> at_left;
    auto point = [&](std::optional<SpecificForce>& slot, WingSide side) -> const SpecificForce& {
      if (!slot) slot = specific_force(config, r, side);
      return *slot;
    };

    std::size_t k = 0;
    for (Output o : spec.outputs) {
      double v = kNaN;
      switch (o) {
        case Output::p_x: v = point(at_side, spec.side).p_x; break;
        case Output::p_z: v = point(at_side, spec.side).p_z; break;
        case Output::f_x: v = scoped_fx(); break;
        case Output::f_z: v = scoped_fz(); break;
        case Output::ratio: {
          const double fz = scoped_fz();
          if (fz == 0.0) throw Error(ErrorCode::DivisionByZeroForce, "compression force is zero");
          v = scoped_fx() / fz;
          break;
        }
        case Output::w_x: v = std::abs(scoped_fx()) / config.R(); break;
        case Output::torque: v = total->torque_y; break;
        case Output::p_x_right: v = point(at_right, WingSide::right).p_x; break;
        case Output::p_z_right: v = point(at_right, WingSide::right).p_z; break;
        case Output::p_x_left: v = point(at_left, WingSide::left).p_x; break;
        case Output::p_z_left: v = point(at_left, WingSide::left).p_z; break;
        case Output::f_x_right: v = right->f_x; break;
        case Output::f_x_left: v = total->left().f_x; break;
        case Output::f_z_right: v = right->f_z; break;
        case Output::f_z_left: v = total->left().f_z; break;
        case Output::p_classical: v = classical_casimir_pressure(config.a()); break;
        case Output::dx_over_R: v = config.dx() / config.R(); break;
      }
      row.values[k++] = v;
    }
  } catch (const Error& e) {
    row.values.assign(spec.outputs.size(), kNaN);
    row.quadrature_error.reset();
    row.error = e.code();
    row.message = e.what();
  }
  return row;
}

}  // namespace

std::string_view to_string(Swept swept) noexcept {
  switch (swept) {
    case Swept::r: return "r";
    case Swept::R: return "R";
    case Swept::phi: return "phi";
    case Swept::dx: return "dx";
  }
  return "?";
}

std::string_view to_string(Output output) noexcept {
  for (const auto& entry : kOutputNames) {
    if (entry.output == output) return entry.name;
  }
  return "?";
}

std::string_view to_string(ForceScope scope) noexcept {
  return scope == ForceScope::total ? "total" : "right_wing";
}

Swept parse_swept(std::string_view name) {
  for (Swept s : {Swept::r, Swept::R, Swept::phi, Swept::dx}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::InvalidSweep, "unknown swept quantity '" + std::string(name) + "'");
}

Output parse_output(std::string_view name) {
  for (const auto& entry : kOutputNames) {
    if (entry.name == name) return entry.output;
  }
  throw Error(ErrorCode::InvalidSweep, "unknown output '" + std::string(name) + "'");
}

ForceScope parse_scope(std::string_view name) {
  if (name == "total") return ForceScope::total;
  if (name == "right_wing" || name == "right") return ForceScope::right_wing;
  throw Error(ErrorCode::InvalidArgument, "unknown force scope '" + std::string(name) + "'");
}

WingSide parse_side(std::string_view name) {
  if (name == "right") return WingSide::right;
  if (name == "left") return WingSide::left;
  throw Error(ErrorCode::InvalidArgument, "unknown wing side '" + std::string(name) + "'");
}

bool is_pointwise(Output output) noexcept {
  switch (output) {
    case Output::p_x:
    case Output::p_z:
    case Output::p_x_right:
    case Output::p_z_right:
    case Output::p_x_left:
    case Output::p_z_left:
      return true;
    default:
      return false;
  }
}

bool is_integrated(Output output) noexcept {
  return !is_pointwise(output) && output != Output::p_classical && output != Output::dx_over_R;
}

bool SweepResult::any_failed() const noexcept {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.error.has_value(); });
}

ValidatedConfig config_for(const SweepSpec& spec, double value) {
  CavityConfig c = spec.base;
  switch (spec.swept) {
    case Swept::r: break;
    case Swept::R: c.R = value; break;
    case Swept::phi: c.phi = value; break;
    case Swept::dx: c.dx = value; break;
  }
  return validate(c);
}

void check_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw Error(ErrorCode::EmptySweep, "sweep has no values");
  if (spec.outputs.empty()) throw Error(ErrorCode::EmptySweep, "sweep requests no outputs");
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    if (!(spec.values[i] > spec.values[i - 1])) {
      throw Error(ErrorCode::InvalidSweep, "sweep values must be strictly increasing");
    }
  }
  for (Output o : spec.outputs) {
    if (spec.swept == Swept::r && is_integrated(o)) {
      throw Error(ErrorCode::InvalidSweep,
                  "output " + std::string(to_string(o)) + " is an integral and cannot vary with r");
    }
    if (spec.swept != Swept::r && is_pointwise(o)) {
      throw Error(ErrorCode::InvalidSweep,
                  "output " + std::string(to_string(o)) + " needs an r sweep");
    }
  }
  for (double v : spec.values) {
    const ValidatedConfig c = config_for(spec, v);
    if (spec.swept == Swept::r && !(v >= 0.0 && v <= c.R())) {
      throw Error(ErrorCode::InvalidSweep, "r values must lie in [0, R]");
    }
  }
}

SweepResult run_sweep(const SweepSpec& spec, const RunOptions& options) {
  check_sweep(spec);

  SweepResult result;
  result.spec = spec;
  if (spec.base.a == 0.0) result.metadata.apex_cutoff = kApexCutoff;
  result.rows.resize(spec.values.size());

  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, spec.values.size());

  if (threads == 1) {
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      result.rows[i] = evaluate_row(spec, spec.values[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < spec.values.size(); i = next++) {
          result.rows[i] = evaluate_row(spec, spec.values[i]);
        }
      });
    }
  }

  if (std::all_of(result.rows.begin(), result.rows.end(),
                  [](const SweepRow& r) { return r.error.has_value(); })) {
    throw Error(ErrorCode::AllRowsFailed, "every sweep row failed; first: " + result.rows.front().message);
  }
  return result;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > 0.0)) throw Error(ErrorCode::InvalidSweep, "log grid needs positive bounds");
  std::vector<double> g = linear_grid(std::log(lo), std::log(hi), n);
  for (double& v : g) v = std::exp(v);
  if (!g.empty()) {
    g.front() = lo;
    g.back() = hi;
  }
  return g;
}

}  // namespace casimir::app
