#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/forces.hpp"
#include "casimir/geometry.hpp"

namespace casimir::app {

inline constexpr std::string_view kToolName = "casimir";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Swept { r, R, phi, dx };

/// Output columns, declared in emission order. The first seven follow the
/// sweep's side/scope; the rest are explicitly labelled per wing.
enum class Output {
  p_x,
  p_z,
  f_x,
  f_z,
  ratio,
  w_x,
  torque,
  p_x_right,
  p_z_right,
  p_x_left,
  p_z_left,
  f_x_right,
  f_x_left,
  f_z_right,
  f_z_left,
  p_classical,
  dx_over_R,
};

std::string_view to_string(Swept swept) noexcept;
std::string_view to_string(Output output) noexcept;
std::string_view to_string(ForceScope scope) noexcept;
Swept parse_swept(std::string_view name);
Output parse_output(std::string_view name);
ForceScope parse_scope(std::string_view name);
WingSide parse_side(std::string_view name);

/// True for outputs evaluated at a wing point (valid only when sweeping r).
bool is_pointwise(Output output) noexcept;
/// True for outputs that need the r-integral (invalid when sweeping r).
bool is_integrated(Output output) noexcept;

struct SweepSpec {
  Swept swept = Swept::r;
  std::vector<double> values;  // SI units; phi in radians
  CavityConfig base;
  std::set<Output> outputs;    // iterated in catalog order
  WingSide side = WingSide::right;
  ForceScope scope = ForceScope::total;
};

struct SweepRow {
  double swept_value = 0.0;
  std::vector<double> values;  // one per output, catalog order; NaN on failure
  std::optional<double> quadrature_error;
  std::optional<ErrorCode> error;
  std::string message;
};

struct SweepMetadata {
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::optional<std::string> figure;
  std::optional<double> apex_cutoff;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  SweepMetadata metadata;

  bool any_failed() const noexcept;
};

struct RunOptions {
  /// Worker threads for row evaluation; 0 uses the hardware concurrency.
  std::size_t threads = 1;
};

/// Throws on an invalid spec: EmptySweep, InvalidSweep, or the validation
/// error of the first value that yields an invalid configuration.
void check_sweep(const SweepSpec& spec);

/// The configuration for one swept value (r sweeps leave the base unchanged).
ValidatedConfig config_for(const SweepSpec& spec, double value);

/// Evaluates every row independently; per-row failures are recorded in the
/// row. Rows come back in input order regardless of thread count.
SweepResult run_sweep(const SweepSpec& spec, const RunOptions& options = {});

std::vector<double> linear_grid(double lo, double hi, std::size_t n);
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace casimir::app
