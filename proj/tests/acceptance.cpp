// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/app/catalog.hpp"
#include "casimir/error.hpp"
#include "casimir/forces.hpp"
#include "casimir/kernel.hpp"
#include "oracles.hpp"

using namespace casimir;
namespace ct = casimir::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

Outcome kernel_equivalence() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> phi(0.0, kPi / 4), th(0.0, kPi);
  double worst1 = 0.0, worst2 = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double p = phi(rng);
    double t1 = th(rng), t2 = th(rng);
    if (t1 > t2) std::swap(t1, t2);
    worst1 = std::max(worst1, std::abs(a1_closed(p, t1, t2) - a1_quad(p, t1, t2)));
    worst2 = std::max(worst2, std::abs(a2_closed(p, t1, t2) - a2_quad(p, t1, t2)));
  }
  return {worst1 < 1e-12 && worst2 < 1e-12,
          fmt("max |closed - quad| A1 %.2e, A2 %.2e over 10000 triples", worst1, worst2)};
}

Outcome shift_reduction() {
  ct::ConfigSampler sample(2);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = sample(false);
    const auto v = validate(c);
    const double r = sample.uniform(0.0, c.R);
    const auto want = ct::unshifted_limit_angles(c.a, c.R, c.phi, r);
    for (WingSide side : {WingSide::right, WingSide::left}) {
      const auto got = limit_angles(v, r, side);
      worst = std::max({worst, std::abs(got.theta1 - want.theta1), std::abs(got.theta2 - want.theta2)});
    }
  }
  return {worst < 1e-12, fmt("max angle difference %.2e rad over 1000 configs", worst)};
}

Outcome edge_ratios() {
  const double a = 4e-7;
  const auto v = validate({a, 100 * a, 1.0, 0.0, 0.0});
  const auto edge = specific_force(v, 0.0, WingSide::right);
  const auto mid = specific_force(v, 50 * a, WingSide::right);
  const double r1 = edge.p_z / mid.p_z;
  const double r2 = edge.p_x / edge.p_z;
  const double r3 = std::abs(edge.p_x) / std::abs(classical_casimir_pressure(a));
  return {within(r1, 0.5, 0.02) && within(r2, 0.375, 0.02) && within(r3, 0.2, 0.02),
          fmt("p_z(0)/p_z(R/2) %.5f, p_x/p_z %.5f, |p_x|/classical %.5f", r1, r2, r3)};
}

Outcome compensation() {
  ct::ConfigSampler sample(4);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto c = sample(false);
    c.phi = 0.0;
    const auto t = total_force(validate(c));
    worst = std::max(worst, std::abs(t.f_x_total) / std::abs(t.f_z_total));
  }
  return {worst < 1e-9, fmt("max |F_x|/|F_z| %.2e over 50 parallel configs", worst)};
}

Outcome restoring() {
  const double a = 4e-7;
  bool ok = true;
  std::string detail;
  for (double q : {0.25, 1.0, 2.5}) {
    const auto t = total_force(validate({a, 10 * a, 1.0, 0.0, q * a}));
    const double fr = t.right().f_x, fl = t.left().f_x;
    const double mismatch = std::abs(fl + fr) / std::abs(fr);
    ok = ok && fr != 0.0 && mismatch < 1e-9 && t.torque_y < 0.0;
    detail += fmt("dx/a=%.2f: f_x right %.3e left %.3e torque %.3e; ", q, fr, fl, t.torque_y);
  }
  return {ok, detail};
}

Outcome extremum() {
  const double a = 4e-7, R = 10 * a, dx = a;
  const std::size_t n = 513;
  const auto prof = force_profile(validate({a, R, 1.0, 0.0, dx}), WingSide::right, n);
  const double cell = 1.0 / static_cast<double>(n - 1);
  const double target = (R - dx) / R;
  double best = 1.0;
  double found = -1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d1 = prof.samples[i].p_x - prof.samples[i - 1].p_x;
    const double d2 = prof.samples[i + 1].p_x - prof.samples[i].p_x;
    if (d1 * d2 < 0.0 && std::abs(prof.samples[i].r_over_R - target) < best) {
      best = std::abs(prof.samples[i].r_over_R - target);
      found = prof.samples[i].r_over_R;
    }
  }
  return {found > 0.0 && best <= cell,
          fmt("interior extremum at r/R %.5f, expected %.5f, cell %.5f", found, target, cell)};
}

Outcome reff_reproduction() {
  const double a = 4e-10;
  const auto base = validate({a, a, 1.0, 1 * kDeg, 0.0});
  const auto shifted = validate({a, a, 1.0, 1 * kDeg, 0.5 * a});
  std::string detail;

  const auto un = find_reff(base, 0.1 * a, 1e4 * a, ForceScope::total);
  const double f_total = std::abs(un.f_at_reff);
  const double f_wing = std::abs(expulsion_force(with_wing_length(base, un.r_eff), ForceScope::right_wing));
  const bool primary = within(un.r_eff, 1.85e-9, 0.10) &&
                       (within(f_total, 5.7, 0.15) || within(f_wing, 5.7, 0.15));
  detail += fmt("r_eff %.4e m, |F_x| total %.4g N, per wing %.4g N (target 1.85e-9 m, 5.7 N); ",
                un.r_eff, f_total, f_wing);
  if (primary) return {true, detail};

  // fallback: unique interior maximum, and the shift pulls it to ~a while the
  // force grows by a factor in [2, 6]; both per-wing and total readings
  bool fallback = false;
  for (ForceScope scope : {ForceScope::right_wing, ForceScope::total}) {
    try {
      const auto u = find_reff(base, 0.1 * a, 1e4 * a, scope);
      const auto s = find_reff(shifted, 0.1 * a, 1e4 * a, scope);
      const double factor = std::abs(s.f_at_reff) / std::abs(u.f_at_reff);
      const bool ok = within(s.r_eff, a, 0.25) && factor >= 2.0 && factor <= 6.0;
      detail += fmt("fallback %s: shifted r_eff/a %.3f, |F_x| %.4g N, factor %.3f; ",
                    scope == ForceScope::total ? "total" : "right_wing", s.r_eff / a,
                    std::abs(s.f_at_reff), factor);
      fallback = fallback || ok;
    } catch (const Error& e) {
      detail += fmt("fallback scan failed: %s; ", e.what());
    }
  }
  return {fallback, detail};
}

Outcome ratio_asymptotics() {
  const double a = 4e-10;
  const double phi = 1 * kDeg;
  const auto far_un = validate({a, 1e3 * a, 1.0, phi, 0.0});
  const auto far_sh = validate({a, 1e3 * a, 1.0, phi, 0.5 * a});
  const double r_un = std::abs(force_ratio(far_un, ForceScope::right_wing));
  const double r_sh = std::abs(force_ratio(far_sh, ForceScope::right_wing));
  const double r_sh_total = std::abs(force_ratio(far_sh, ForceScope::total));
  const auto opt = find_reff(validate({a, a, 1.0, phi, 0.5 * a}), 0.1 * a, 1e4 * a,
                             ForceScope::right_wing);
  const double r_opt = std::abs(force_ratio(with_wing_length(far_sh, opt.r_eff), ForceScope::right_wing));
  const bool ok = within(r_un, 4.2e-3, 0.15) && within(r_sh, 1.3e-2, 0.15) && within(r_opt, 0.46, 0.15);
  return {ok, fmt("large R: %.4e unshifted, %.4e shifted (total %.4e); at r_eff %.3fa: %.4f "
                  "(targets 4.2e-3, 1.3e-2, 0.46)",
                  r_un, r_sh, r_sh_total, opt.r_eff / a, r_opt)};
}

Outcome shift_decay() {
  const double a = 4e-10, R = 1.85e-9;
  const auto fx = [&](double q) {
    return expulsion_force(validate({a, R, 1.0, 1 * kDeg, q * R}), ForceScope::total);
  };
  const double f0 = fx(0.0);
  const double keep = std::abs(fx(0.05)) / std::abs(f0);
  bool ok = within(keep, 0.99, 0.02);
  std::string detail = fmt("retention %.5f; decay", keep);
  double prev = INFINITY;
  for (double q : {1.2, 2.0, 5.0, 10.0}) {
    const double f = fx(q);
    ok = ok && (f > 0.0) == (f0 > 0.0) && std::abs(f) < prev;
    prev = std::abs(f);
    detail += fmt(" %.3e", f / f0);
  }
  return {ok, detail};
}

Outcome scaling() {
  const CavityConfig c{4e-8, 3e-7, 1.0, 2 * kDeg, 1e-8};
  const double r = 1.3e-7;
  const auto v = validate(c);
  const auto p = specific_force(v, r, WingSide::left);
  const auto t = total_force(v);
  double worst = 0.0;
  for (double lam : {0.5, 2.0, 10.0}) {
    // L stays fixed: forces are per unit width
    const auto w = validate({lam * c.a, lam * c.R, c.L, c.phi, lam * c.dx});
    const auto ps = specific_force(w, lam * r, WingSide::left);
    const auto ts = total_force(w);
    const double l4 = std::pow(lam, -4), l3 = std::pow(lam, -3);
    worst = std::max({worst, std::abs(ps.p_x / (p.p_x * l4) - 1), std::abs(ps.p_z / (p.p_z * l4) - 1),
                      std::abs(ts.f_x_total / (t.f_x_total * l3) - 1),
                      std::abs(ts.f_z_total / (t.f_z_total * l3) - 1)});
  }
  return {worst < 1e-9, fmt("max relative deviation %.2e", worst)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "casimir_acceptance";
  fs::remove_all(root);
  bool ok = true;
  std::size_t files = 0;
  for (const char* tag : {"fig2b", "fig5c", "fig8a"}) {
    std::vector<std::string> first;
    int run = 0;
    for (std::size_t threads : {1u, 1u, 4u}) {
      const fs::path dir = root / (std::string(tag) + "_" + std::to_string(run++));
      fs::create_directories(dir);
      const auto m = app::reproduce(tag, dir, {}, {threads});
      std::vector<std::string> bytes;
      for (const auto& out : m.outputs) bytes.push_back(slurp(out));
      bytes.push_back(slurp(dir / (std::string(tag) + ".manifest.json")));
      if (first.empty()) {
        first = bytes;
        files += bytes.size();
      } else {
        ok = ok && bytes == first;
      }
    }
  }
  fs::remove_all(root);
  return {ok, fmt("3 tags x 3 runs (threads 1, 1, 4), %zu files per run compared", files)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"kernel closed forms match quadrature", kernel_equivalence},
      {"shifted limit angles reduce to the unshifted ones", shift_reduction},
      {"parallel-plate edge ratios", edge_ratios},
      {"compensation of parallel plates", compensation},
      {"restoring forces and clockwise torque under shift", restoring},
      {"extremum at (R - dx)/R", extremum},
      {"optimal wing length reproduction", reff_reproduction},
      {"force ratio asymptotics", ratio_asymptotics},
      {"shift retention and decay", shift_decay},
      {"length scaling laws", scaling},
      {"reproduce determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("%s %2d %s: %s\n", out.pass ? "PASS" : "FAIL", index, name, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
