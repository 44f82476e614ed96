#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "casimir/app/sweep.hpp"

namespace casimir::app {

/// Number format used for CSV cells: 17 significant digits, scientific.
std::string format_number(double value);

/// Header `swept_value,<outputs>` then one LF-terminated line per row. A
/// trailing `status` column is added only when some row failed.
std::string to_csv(const SweepResult& result);

/// Same content as the CSV plus a metadata object; keys in fixed order.
std::string to_json(const SweepResult& result);

/// Writes and returns the number of bytes; SinkWriteFailure on stream error.
std::size_t emit_csv(const SweepResult& result, std::ostream& out);
std::size_t emit_json(const SweepResult& result, std::ostream& out);

/// Writes to `<path>.tmp` and renames over `path`, so readers never see a
/// partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace casimir::app
