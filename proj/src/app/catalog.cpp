#include "casimir/app/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include <json.hpp>

#include "casimir/app/config.hpp"
#include "casimir/app/emit.hpp"

namespace casimir::app {

namespace {

using ordered_json = nlohmann::ordered_json;

SweepSpec profile(const CavityConfig& base, std::set<Output> outputs, std::size_t n) {
  SweepSpec spec;
  spec.swept = Swept::r;
  spec.base = base;
  spec.values = linear_grid(0.0, base.R, n);
  spec.outputs = std::move(outputs);
  return spec;
}

const std::set<Output> kProfileX = {Output::p_x_right, Output::p_x_left};
const std::set<Output> kProfileZ = {Output::p_z_right, Output::p_z_left};
const std::set<Output> kProfileBoth = {Output::p_x_right, Output::p_z_right, Output::p_x_left,
                                       Output::p_z_left};

std::set<Output> profile_outputs(int kind) {
  switch (kind) {
    case 0: return kProfileX;
    case 1: return kProfileZ;
    default: return kProfileBoth;
  }
}

std::string ratio_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Micron-scale parallel/trapezoid profiles: R = 10 a.
FigureEntry fig2(int idx, const CatalogOptions& o) {
  const double a = o.a_override.value_or(kDefaultSeparation);
  const double shifts[] = {0.0, 1.0, 2.5};  // dx / a: 0, 4e-7 m, 1e-6 m at the default a
  const double dx = shifts[idx / 2] * a;
  CavityConfig base{a, 10.0 * a, 1.0, 0.0, dx};
  std::set<Output> outputs = idx % 2 == 0 ? kProfileX : kProfileZ;
  if (idx % 2 == 1) outputs.insert(Output::p_classical);
  FigureEntry e;
  e.title = idx % 2 == 0 ? "specific expulsion force along the wings, phi=0"
                         : "specific pressure along the wings with classical level, phi=0";
  e.series.push_back({"", profile(base, outputs, o.profile_points)});
  return e;
}

FigureEntry shifted_profiles(int idx, double phi, const double* shifts, const CatalogOptions& o,
                             const char* title) {
  const double a = o.a_override.value_or(kDefaultSeparation);
  const double R = 10.0 * a;
  CavityConfig base{a, R, 1.0, phi, shifts[idx / 3] * R};
  FigureEntry e;
  e.title = std::string(title) + ", dx/R=" + ratio_label(shifts[idx / 3]);
  e.series.push_back({"", profile(base, profile_outputs(idx % 3), o.profile_points)});
  return e;
}

FigureEntry fig5(int idx, const CatalogOptions& o) {
  const double a = o.a_override.value_or(kNanoSeparation);
  const double phi = deg_to_rad(1.0);
  const std::vector<double> lengths = log_grid(0.1 * a, 1e4 * a, o.sweep_points);

  static const char* kTitles[] = {"expulsion force vs wing length", "compression force vs wing length",
                                  "expulsion effectiveness W_x = |F_x^right|/R vs wing length",
                                  "F_x/F_z of the right wing vs wing length"};
  std::set<Output> outputs;
  ForceScope scope = ForceScope::total;
  switch (idx) {
    case 0: outputs = {Output::f_x, Output::f_x_right, Output::f_x_left}; break;
    case 1: outputs = {Output::f_z, Output::f_z_right, Output::f_z_left}; break;
    case 2: outputs = {Output::w_x}; scope = ForceScope::right_wing; break;
    default: outputs = {Output::ratio}; scope = ForceScope::right_wing; break;
  }

  FigureEntry e;
  e.title = std::string(kTitles[idx]) + ", phi=1deg";
  for (double shift : {0.0, 0.5}) {
    SweepSpec spec;
    spec.swept = Swept::R;
    spec.values = lengths;
    spec.base = {a, lengths.front(), 1.0, phi, shift * a};
    spec.outputs = outputs;
    spec.scope = scope;
    e.series.push_back({"dx" + ratio_label(shift) + "a", std::move(spec)});
  }
  return e;
}

FigureEntry fig6(int idx, const CatalogOptions& o) {
  const double a = o.a_override.value_or(kNanoSeparation);
  const double R = kReportedReff * (a / kNanoSeparation);
  const double phi = deg_to_rad(1.0);
  const double shifts[] = {0.0, 0.05, 0.4, 1.2};  // dx / R
  const double dx = shifts[idx / 2] * R;

  FigureEntry e;
  if (idx % 2 == 0) {
    e.title = "specific forces on both wings fixed after the shift, phi=1deg, dx/R=" +
              ratio_label(shifts[idx / 2]);
    e.series.push_back({"", profile({a, R, 1.0, phi, dx}, kProfileBoth, o.profile_points)});
  } else {
    e.title = "integral expulsion of both wings vs wing length, phi=1deg, dx=" +
              ratio_label(shifts[idx / 2]) + " R_eff";
    SweepSpec spec;
    spec.swept = Swept::R;
    spec.values = log_grid(0.1 * a, 100.0 * a, o.sweep_points);
    spec.base = {a, spec.values.front(), 1.0, phi, dx};
    spec.outputs = {Output::f_x, Output::f_x_right, Output::f_x_left};
    e.series.push_back({"", std::move(spec)});
  }
  return e;
}

FigureEntry fig7(int idx, const CatalogOptions& o) {
  const double a = o.a_override.value_or(kNanoSeparation);
  const double R = kReportedReff * (a / kNanoSeparation);
  const double degrees[] = {1.0, 3.0, 5.0};
  const double phi = deg_to_rad(degrees[idx]);
  // Stay inside phi <= arccot(dx / a).
  const double dx_max = std::min(10.0 * R, 0.9 * a / std::tan(phi));

  SweepSpec spec;
  spec.swept = Swept::dx;
  spec.values = linear_grid(0.0, dx_max, o.sweep_points);
  spec.base = {a, R, 1.0, phi, 0.0};
  spec.outputs = {Output::f_x, Output::f_x_right, Output::f_x_left, Output::dx_over_R};

  FigureEntry e;
  e.title = "per-wing and total expulsion vs shift, phi=" + ratio_label(degrees[idx]) + "deg";
  e.series.push_back({"", std::move(spec)});
  return e;
}

FigureEntry fig8(int idx, const CatalogOptions& o) {
  const double a = o.a_override.value_or(kNanoSeparation);
  const double shifts[] = {0.0, 0.05, 0.3};  // dx / a
  const double dx = shifts[idx / 3] * a;
  const std::vector<double> angles = linear_grid(0.0, deg_to_rad(10.0), o.sweep_points);
  const int kind = idx % 3;

  static const char* kTitles[] = {"right-wing expulsion vs opening angle",
                                  "right-wing compression vs opening angle",
                                  "right-wing F_x/F_z vs opening angle"};
  FigureEntry e;
  e.title = std::string(kTitles[kind]) + ", dx/a=" + ratio_label(shifts[idx / 3]);

  const std::pair<const char*, double> lengths[] = {
      {"R0.5a", 0.5 * a}, {"R1a", a}, {"R2a", 2.0 * a},
      {"Reff", kReportedReff * (a / kNanoSeparation)}, {"R10a", 10.0 * a}};
  for (const auto& [name, R] : lengths) {
    SweepSpec spec;
    spec.swept = Swept::phi;
    spec.values = angles;
    spec.base = {a, R, 1.0, 0.0, dx};
    spec.scope = ForceScope::right_wing;
    spec.outputs = kind == 0 ? std::set<Output>{Output::f_x_right}
                 : kind == 1 ? std::set<Output>{Output::f_z_right}
                             : std::set<Output>{Output::ratio};
    e.series.push_back({name, std::move(spec)});
  }
  return e;
}

ordered_json spec_json(const SweepSpec& spec) {
  ordered_json j;
  j["swept"] = to_string(spec.swept);
  j["values"] = spec.values;
  j["base"] = {{"a_m", spec.base.a}, {"R_m", spec.base.R}, {"L_m", spec.base.L},
               {"phi_rad", spec.base.phi}, {"dx_m", spec.base.dx}};
  ordered_json outputs = ordered_json::array();
  for (Output o : spec.outputs) outputs.push_back(to_string(o));
  j["outputs"] = outputs;
  j["side"] = to_string(spec.side);
  j["scope"] = to_string(spec.scope);
  return j;
}

}  // namespace

const std::vector<std::string>& figure_tags() {
  static const std::vector<std::string> tags = [] {
    const std::pair<int, char> families[] = {{2, 'f'}, {3, 'l'}, {4, 'i'}, {5, 'd'},
                                             {6, 'h'}, {7, 'c'}, {8, 'i'}};
    std::vector<std::string> out;
    for (const auto& [fig, last] : families) {
      for (char c = 'a'; c <= last; ++c) out.push_back("fig" + std::to_string(fig) + c);
    }
    return out;
  }();
  return tags;
}

FigureEntry figure_entry(std::string_view tag, const CatalogOptions& options) {
  const auto& tags = figure_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
    throw Error(ErrorCode::UnknownFigureTag, "unknown figure tag '" + std::string(tag) + "'");
  }
  const int fig = tag[3] - '0';
  const int idx = tag[4] - 'a';

  static const double kShifts3[] = {0.05, 0.4, 1.2, 2.0};
  static const double kShifts4[] = {0.05, 0.4, 1.2};

  FigureEntry e;
  switch (fig) {
    case 2: e = fig2(idx, options); break;
    case 3: e = shifted_profiles(idx, 0.0, kShifts3, options, "shifted parallel plates"); break;
    case 4:
      e = shifted_profiles(idx, deg_to_rad(1.0), kShifts4, options, "shifted trapezoid, phi=1deg");
      break;
    case 5: e = fig5(idx, options); break;
    case 6: e = fig6(idx, options); break;
    case 7: e = fig7(idx, options); break;
    default: e = fig8(idx, options); break;
  }
  e.tag = std::string(tag);
  return e;
}

std::string canonical_description(const FigureEntry& entry) {
  ordered_json j;
  j["tag"] = entry.tag;
  j["title"] = entry.title;
  ordered_json series = ordered_json::array();
  for (const auto& s : entry.series) {
    ordered_json item;
    item["name"] = s.name;
    item["spec"] = spec_json(s.spec);
    series.push_back(std::move(item));
  }
  j["series"] = std::move(series);
  return j.dump();
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunManifest reproduce(std::string_view tag, const std::filesystem::path& out_dir,
                      const CatalogOptions& options, const RunOptions& run) {
  const FigureEntry entry = figure_entry(tag, options);
  std::filesystem::create_directories(out_dir);

  RunManifest manifest;
  manifest.scenario = entry.title;
  manifest.figure = entry.tag;
  manifest.input_hash = fnv1a64_hex(canonical_description(entry));

  ordered_json files = ordered_json::array();
  for (const FigureSeries& series : entry.series) {
    SweepResult result = run_sweep(series.spec, run);
    result.metadata.figure = entry.tag;
    const std::string stem = series.name.empty() ? entry.tag : entry.tag + "_" + series.name;
    for (const auto& [ext, text] : {std::pair{".csv", to_csv(result)}, std::pair{".json", to_json(result)}}) {
      const std::filesystem::path path = out_dir / (stem + ext);
      write_atomic(path, text);
      manifest.outputs.push_back(path);
      files.push_back(stem + ext);
    }
  }

  ordered_json j;
  j["scenario"] = manifest.scenario;
  j["figure"] = manifest.figure;
  j["input_hash"] = manifest.input_hash;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["outputs"] = std::move(files);
  const std::filesystem::path manifest_path = out_dir / (entry.tag + ".manifest.json");
  write_atomic(manifest_path, j.dump(2) + "\n");
  manifest.outputs.push_back(manifest_path);
  return manifest;
}

}  // namespace casimir::app
