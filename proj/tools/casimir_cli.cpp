// Command-line front end: profiles, forces, parameter sweeps, R_eff search and
// canned figure reproduction. Errors are reported as one JSON line on stderr.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/app/catalog.hpp"
#include "casimir/app/config.hpp"
#include "casimir/app/emit.hpp"
#include "casimir/app/sweep.hpp"
#include "casimir/error.hpp"
#include "casimir/forces.hpp"

namespace {

using namespace casimir;
using namespace casimir::app;

struct CommonArgs {
  std::optional<double> a;
  std::optional<double> R;
  std::optional<double> L;
  std::optional<double> phi_deg;
  std::optional<double> dx;
  std::size_t samples = 0;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  std::size_t threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--a", args.a, "plate separation at the narrow end (m)");
  cmd->add_option("--R", args.R, "wing length (m)");
  cmd->add_option("--L", args.L, "cavity width along y (m)");
  cmd->add_option("--phi-deg", args.phi_deg, "half-opening angle (degrees)");
  cmd->add_option("--dx", args.dx, "shift of the left wing against x (m)");
  cmd->add_option("--samples", args.samples, "grid points (profiles 512, sweeps 64 by default)");
  cmd->add_option("--out", args.out, "output file (default stdout)");
  cmd->add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", args.config_path, "key=value configuration file");
  cmd->add_option("--threads", args.threads, "worker threads for sweep rows (0 = all cores)");
}

CavityConfig resolve_config(const CommonArgs& args) {
  CavityConfig c;
  if (!args.config_path.empty()) {
    c = parse_config(read_text_file(args.config_path));
  } else {
    if (!args.R) throw Error(ErrorCode::MissingKey, "wing length --R (or R_m in --config) is required");
    c.a = kDefaultSeparation;
    c.L = kDefaultWidth;
  }
  if (args.a) c.a = *args.a;
  if (args.R) c.R = *args.R;
  if (args.L) c.L = *args.L;
  if (args.phi_deg) c.phi = deg_to_rad(*args.phi_deg);
  if (args.dx) c.dx = *args.dx;
  return c;
}

void write_result(const SweepResult& result, const CommonArgs& args) {
  const std::string text = args.format == "json" ? to_json(result) : to_csv(result);
  if (args.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::SinkWriteFailure, "failed to write stdout");
  } else {
    write_atomic(args.out, text);
  }
}

void write_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_atomic(out, text);
  }
}

void report(const Error& e) {
  nlohmann::ordered_json j;
  j["error"] = to_string(e.code());
  j["message"] = e.what();
  if (const auto* nu = dynamic_cast<const NotUnimodalError*>(&e)) j["candidates"] = nu->candidates();
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir expulsion forces in shifted trapezoid and parallel nanocavities"};
  app.require_subcommand(1);

  // profile
  CommonArgs profile_args;
  std::string profile_side = "both";
  auto* profile_cmd = app.add_subcommand("profile", "specific forces p_x, p_z along the wings");
  add_common(profile_cmd, profile_args);
  profile_cmd->add_option("--side", profile_side, "right, left or both")
      ->check(CLI::IsMember({"right", "left", "both"}));

  // force
  CommonArgs force_args;
  auto* force_cmd = app.add_subcommand("force", "integrated forces, ratio, effectiveness, torque");
  add_common(force_cmd, force_args);
  std::string force_scope = "total";
  force_cmd->add_option("--scope", force_scope, "total or right_wing (for f_x, f_z, ratio, w_x)");

  // sweep
  CommonArgs sweep_args;
  std::string swept = "R";
  double from = 0.0;
  double to = 0.0;
  bool log_spacing = false;
  std::vector<std::string> outputs{"f_x", "f_z"};
  std::string sweep_scope = "total";
  std::string sweep_side = "right";
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter (r, R, phi, dx)");
  add_common(sweep_cmd, sweep_args);
  sweep_cmd->add_option("--swept", swept, "r, R, phi or dx")->check(CLI::IsMember({"r", "R", "phi", "dx"}));
  sweep_cmd->add_option("--from", from, "first value (m; degrees for phi)")->required();
  sweep_cmd->add_option("--to", to, "last value (m; degrees for phi)")->required();
  sweep_cmd->add_flag("--log", log_spacing, "log-spaced grid");
  sweep_cmd->add_option("--outputs", outputs, "output columns")->delimiter(',');
  sweep_cmd->add_option("--scope", sweep_scope, "total or right_wing");
  sweep_cmd->add_option("--side", sweep_side, "wing for p_x/p_z");

  // find-reff
  CommonArgs reff_args;
  double r_min = 0.0;
  double r_max = 0.0;
  std::string reff_scope = "total";
  auto* reff_cmd = app.add_subcommand("find-reff", "wing length maximising |F_x|/R");
  add_common(reff_cmd, reff_args);
  reff_cmd->add_option("--r-min", r_min, "lower end of the R bracket (m)")->required();
  reff_cmd->add_option("--r-max", r_max, "upper end of the R bracket (m)")->required();
  reff_cmd->add_option("--scope", reff_scope, "total or right_wing");

  // reproduce
  std::string tag;
  std::string out_dir = ".";
  std::optional<double> a_override;
  std::size_t reproduce_threads = 1;
  std::optional<std::size_t> reproduce_samples;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "write the data behind one figure panel");
  reproduce_cmd->add_option("tag", tag, "figure tag, e.g. fig5c");
  reproduce_cmd->add_option("--out-dir", out_dir, "output directory");
  reproduce_cmd->add_option("--a", a_override, "separation override (m)");
  reproduce_cmd->add_option("--samples", reproduce_samples, "grid points for every series");
  reproduce_cmd->add_option("--threads", reproduce_threads, "worker threads (0 = all cores)");
  bool list_tags = false;
  reproduce_cmd->add_flag("--list", list_tags, "print the catalog and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*profile_cmd) {
      const CavityConfig base = resolve_config(profile_args);
      const ValidatedConfig v = validate(base);
      SweepSpec spec;
      spec.swept = Swept::r;
      spec.base = base;
      spec.values = linear_grid(v.r_min(), v.R(),
                                profile_args.samples ? profile_args.samples : kProfilePoints);
      if (profile_side == "both") {
        spec.outputs = {Output::p_x_right, Output::p_z_right, Output::p_x_left, Output::p_z_left};
      } else {
        spec.side = parse_side(profile_side);
        spec.outputs = {Output::p_x, Output::p_z};
      }
      write_result(run_sweep(spec, {profile_args.threads}), profile_args);
    } else if (*force_cmd) {
      const CavityConfig base = resolve_config(force_args);
      SweepSpec spec;
      spec.swept = Swept::R;
      spec.base = base;
      spec.values = {base.R};
      spec.scope = parse_scope(force_scope);
      spec.outputs = {Output::f_x,       Output::f_z,      Output::ratio,     Output::w_x,
                      Output::torque,    Output::f_x_right, Output::f_x_left, Output::f_z_right,
                      Output::f_z_left};
      const SweepResult result = run_sweep(spec);
      if (result.rows.front().error) {
        throw Error(*result.rows.front().error, result.rows.front().message);
      }
      write_result(result, force_args);
    } else if (*sweep_cmd) {
      const CavityConfig base = resolve_config(sweep_args);
      SweepSpec spec;
      spec.swept = parse_swept(swept);
      spec.base = base;
      spec.scope = parse_scope(sweep_scope);
      spec.side = parse_side(sweep_side);
      for (const auto& name : outputs) spec.outputs.insert(parse_output(name));
      double lo = from;
      double hi = to;
      if (spec.swept == Swept::phi) {
        lo = deg_to_rad(lo);
        hi = deg_to_rad(hi);
      }
      const std::size_t n = sweep_args.samples ? sweep_args.samples : kSweepPoints;
      spec.values = log_spacing ? log_grid(lo, hi, n) : linear_grid(lo, hi, n);
      write_result(run_sweep(spec, {sweep_args.threads}), sweep_args);
    } else if (*reff_cmd) {
      const CavityConfig base = resolve_config(reff_args);
      const EffectivenessResult res = find_reff(validate(base), r_min, r_max, parse_scope(reff_scope));
      nlohmann::ordered_json j;
      j["r_eff"] = res.r_eff;
      j["w_x"] = res.w_x;
      j["f_at_reff"] = res.f_at_reff;
      j["scope"] = reff_scope;
      write_text(j.dump(2) + "\n", reff_args.out);
    } else if (*reproduce_cmd) {
      if (list_tags) {
        for (const auto& t : figure_tags()) {
          std::cout << t << "\t" << figure_entry(t).title << "\n";
        }
        return 0;
      }
      CatalogOptions options;
      options.a_override = a_override;
      if (reproduce_samples) {
        options.profile_points = *reproduce_samples;
        options.sweep_points = *reproduce_samples;
      }
      const RunManifest m = reproduce(tag, out_dir, options, {reproduce_threads});
      for (const auto& p : m.outputs) std::cout << p.string() << "\n";
    }
  } catch (const Error& e) {
    report(e);
    return 1;
  } catch (const std::exception& e) {
    report(Error(ErrorCode::InvalidArgument, e.what()));
    return 1;
  }
  return 0;
}
