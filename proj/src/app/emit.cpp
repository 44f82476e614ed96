#include "casimir/app/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <system_error>

#include <json.hpp>

#include "casimir/app/config.hpp"
#include "casimir/kernel.hpp"

namespace casimir::app {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ordered_json metadata_json(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  ordered_json meta;
  meta["tool"] = result.metadata.tool;
  meta["version"] = result.metadata.version;
  meta["figure"] = result.metadata.figure ? ordered_json(*result.metadata.figure) : ordered_json();
  meta["swept"] = to_string(spec.swept);
  meta["swept_unit"] = spec.swept == Swept::phi ? "rad" : "m";
  meta["side"] = to_string(spec.side);
  meta["scope"] = to_string(spec.scope);

  ordered_json outputs = ordered_json::array();
  for (Output o : spec.outputs) outputs.push_back(to_string(o));
  meta["outputs"] = outputs;

  ordered_json config;
  config["a_m"] = spec.base.a;
  config["R_m"] = spec.base.R;
  config["L_m"] = spec.base.L;
  config["phi_rad"] = spec.base.phi;
  config["phi_deg"] = rad_to_deg(spec.base.phi);
  config["dx_m"] = spec.base.dx;
  meta["config"] = config;

  ordered_json constants;
  constants["hbar"] = PhysicalConstants::hbar;
  constants["c"] = PhysicalConstants::c;
  meta["constants"] = constants;
  meta["apex_cutoff"] =
      result.metadata.apex_cutoff ? ordered_json(*result.metadata.apex_cutoff) : ordered_json();
  return meta;
}

std::size_t write_all(std::ostream& out, const std::string& text) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::SinkWriteFailure, "failed to write output");
  return text.size();
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.16e", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string to_csv(const SweepResult& result) {
  const bool with_status = result.any_failed();
  std::string out = "swept_value";
  for (Output o : result.spec.outputs) {
    out += ',';
    out += to_string(o);
  }
  if (with_status) out += ",status";
  out += '\n';

  for (const SweepRow& row : result.rows) {
    out += format_number(row.swept_value);
    for (double v : row.values) {
      out += ',';
      out += format_number(v);
    }
    if (with_status) {
      out += ',';
      out += row.error ? to_string(*row.error) : "ok";
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepResult& result) {
  ordered_json doc;
  doc["metadata"] = metadata_json(result);

  ordered_json rows = ordered_json::array();
  for (const SweepRow& row : result.rows) {
    ordered_json j;
    j["swept_value"] = row.swept_value;
    std::size_t k = 0;
    for (Output o : result.spec.outputs) j[std::string(to_string(o))] = number_or_null(row.values[k++]);
    j["quadrature_error"] =
        row.quadrature_error ? number_or_null(*row.quadrature_error) : ordered_json();
    j["status"] = row.error ? to_string(*row.error) : "ok";
    if (row.error) j["message"] = row.message;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::size_t emit_csv(const SweepResult& result, std::ostream& out) {
  if (result.rows.empty()) throw Error(ErrorCode::EmptySweep, "nothing to emit");
  return write_all(out, to_csv(result));
}

std::size_t emit_json(const SweepResult& result, std::ostream& out) {
  if (result.rows.empty()) throw Error(ErrorCode::EmptySweep, "nothing to emit");
  return write_all(out, to_json(result));
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::SinkWriteFailure, "cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::SinkWriteFailure, "failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorCode::SinkWriteFailure, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace casimir::app
