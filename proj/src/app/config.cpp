#include "casimir/app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir::app {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double deg_to_rad(double degrees) noexcept { return degrees * std::numbers::pi / 180.0; }
double rad_to_deg(double radians) noexcept { return radians * 180.0 / std::numbers::pi; }

double parse_number(std::string_view token, std::string_view key) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::MalformedNumber,
                "malformed number for " + std::string(key) + ": '" + std::string(token) + "'");
  }
  return value;
}

CavityConfig parse_config(std::string_view text) {
  CavityConfig config;
  config.a = kDefaultSeparation;
  config.L = kDefaultWidth;
  std::optional<double> wing_length;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::MalformedNumber,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view raw = line.substr(eq + 1);

    if (key == "a_m") {
      config.a = parse_number(raw, key);
    } else if (key == "R_m") {
      wing_length = parse_number(raw, key);
    } else if (key == "L_m") {
      config.L = parse_number(raw, key);
    } else if (key == "phi_deg") {
      config.phi = deg_to_rad(parse_number(raw, key));
    } else if (key == "dx_m") {
      config.dx = parse_number(raw, key);
    } else {
      throw Error(ErrorCode::UnknownKey, "unknown configuration key '" + std::string(key) + "'");
    }
  }

  if (!wing_length) throw Error(ErrorCode::MissingKey, "configuration is missing R_m");
  config.R = *wing_length;
  return config;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace casimir::app
