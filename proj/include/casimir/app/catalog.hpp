#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/app/sweep.hpp"

namespace casimir::app {

/// Separation used by the nanometre-scale families (fig5-fig8) unless
/// overridden; the micron-scale profiles (fig2-fig4) use kDefaultSeparation.
inline constexpr double kNanoSeparation = 4e-10;
/// Reported optimal wing length for phi = 1 deg, used as the fixed R of the
/// fig6/fig7 scenarios (scaled with any separation override).
inline constexpr double kReportedReff = 1.85e-9;

inline constexpr std::size_t kProfilePoints = 512;
inline constexpr std::size_t kSweepPoints = 64;

struct CatalogOptions {
  std::optional<double> a_override;  // replaces the separation of every family
  std::size_t profile_points = kProfilePoints;
  std::size_t sweep_points = kSweepPoints;
};

struct FigureSeries {
  std::string name;  // empty for single-series figures
  SweepSpec spec;
};

struct FigureEntry {
  std::string tag;
  std::string title;
  std::vector<FigureSeries> series;
};

/// fig2a-f, fig3a-l, fig4a-i, fig5a-d, fig6a-h, fig7a-c, fig8a-i.
const std::vector<std::string>& figure_tags();

/// Throws UnknownFigureTag for tags outside the catalog.
FigureEntry figure_entry(std::string_view tag, const CatalogOptions& options = {});

struct RunManifest {
  std::string scenario;
  std::string figure;
  std::string input_hash;  // FNV-1a 64 of the canonical scenario description
  std::vector<std::filesystem::path> outputs;
};

/// Canonical JSON text describing a figure's sweeps (hashed into the manifest).
std::string canonical_description(const FigureEntry& entry);

/// Runs every series of the figure and writes <tag>[_<series>].csv/.json plus
/// <tag>.manifest.json into out_dir.
RunManifest reproduce(std::string_view tag, const std::filesystem::path& out_dir,
                      const CatalogOptions& options = {}, const RunOptions& run = {});

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace casimir::app
