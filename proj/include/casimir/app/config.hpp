#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "casimir/geometry.hpp"

namespace casimir::app {

/// Defaults applied when a key is absent (R_m has none).
inline constexpr double kDefaultSeparation = 4e-7;
inline constexpr double kDefaultWidth = 1.0;

double deg_to_rad(double degrees) noexcept;
double rad_to_deg(double radians) noexcept;

/// Parses flat `key=value` lines with `#` comments. Recognised keys: a_m, R_m,
/// L_m, phi_deg, dx_m. Unknown keys are rejected. The result is not validated.
CavityConfig parse_config(std::string_view text);

/// Parses a number the way the config reader does (the whole token must be a
/// finite decimal/scientific literal). `key` names the field in errors.
double parse_number(std::string_view token, std::string_view key);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace casimir::app
