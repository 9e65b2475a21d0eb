// Command-line front end: classify / simulate / limits / bounds / bessel /
// verify. Options come from flags, optionally seeded by a JSON --config
// file (flags win). Every output file carries the effective config so a
// run can be reproduced from its own header. Numeric output is formatted
// at 17 significant digits; identical configs give byte-identical files.
//
// Exit codes: 0 ok / member; 2 non-member; 3 inconclusive; 64 malformed
// input; 65 solver not applicable; 70 internal numeric fault.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "harmonic/acceptance.hpp"
#include "harmonic/bessel.hpp"
#include "harmonic/dynamics.hpp"
#include "harmonic/lattice.hpp"
#include "harmonic/oscillatory_bounds.hpp"
#include "harmonic/report.hpp"
#include "harmonic/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;
using namespace harmonic;

namespace {

constexpr int kExitNonMember = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitBadInput = 64;
constexpr int kExitSolverMismatch = 65;
constexpr int kExitNumericFault = 70;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  json j;
  in >> j;
  return j;
}

// config value replaces the compiled default; an explicit flag wins over both
template <class T>
void from_config(const json& cfg, const char* key, T& slot) {
  if (cfg.contains(key)) slot = cfg[key].get<T>();
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  if (fs::path(path).has_parent_path())
    fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
}

std::vector<long> parse_indices(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find("..") != std::string::npos) {
      const long a = std::stol(tok.substr(0, tok.find("..")));
      const long b = std::stol(tok.substr(tok.find("..") + 2));
      for (long k = a; k <= b; ++k) out.push_back(k);
    } else if (!tok.empty()) {
      out.push_back(std::stol(tok));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

ordered_json trace_json(const std::vector<std::pair<double, double>>& tr) {
  ordered_json a = ordered_json::array();
  for (const auto& [d, v] : tr) a.push_back({{"delta", d}, {"integral", v}});
  return a;
}

// "lo..hi" -> pair; a single number means [0, hi]
std::pair<double, double> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) return {0.0, std::stod(s)};
  return {std::stod(s.substr(0, pos)), std::stod(s.substr(pos + 2))};
}

// keep only grid points inside [a_lo, a_hi] x [b_lo, b_hi]
void clip_report(report::BoundSweepReport& rep, double a_lo, double a_hi, double b_lo,
                 double b_hi) {
  std::vector<report::GridPoint> grid;
  std::vector<double> values;
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    const auto& p = rep.grid[i];
    if (p.a >= a_lo - 1e-12 && p.a <= a_hi + 1e-12 && p.b >= b_lo - 1e-12 &&
        p.b <= b_hi + 1e-12) {
      grid.push_back(p);
      values.push_back(rep.values[i]);
    }
  }
  if (grid.empty()) throw std::invalid_argument("empty sweep grid after range clipping");
  rep.grid = std::move(grid);
  rep.values = std::move(values);
  rep.finalize();
}

int cmd_classify(const std::string& ic_spec, long window, const std::string& out,
                 const std::string& format, const json& cfg) {
  lattice::InitialCondition ic;
  try {
    ic = lattice::parse_ic_spec(ic_spec);
  } catch (const std::exception& e) {
    std::cerr << "classify: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (window > 0) ic.window = window;
  const auto rep = spectral::classify(ic);

  ordered_json j;
  j["command"] = "classify";
  j["config"] = ordered_json{{"ic", lattice::to_json(ic)}, {"format", format}};
  if (cfg.is_object() && !cfg.empty()) j["config"]["file"] = cfg;
  j["verdict"] = spectral::verdict_name(rep.verdict);
  j["sufficient_sum"] = rep.sufficient_sum;
  j["sufficient_sum_finite"] = rep.sufficient_sum_finite;
  j["l2_norm_qdelta"] = rep.l2_norm_qdelta;
  j["support_radius"] = rep.support_radius;
  j["qdelta_sum"] = rep.qdelta_sum;
  j["sum_increments"] = rep.sum_increments;
  j["l2_by_radius"] = rep.l2_by_radius;
  j["integrability_trace"] = trace_json(rep.integrability_trace);

  if (format == "csv") {
    std::string csv = "# " + j["config"].dump() + "\n";
    csv += "delta,integral_abs_phi\n";
    char buf[80];
    for (const auto& [d, v] : rep.integrability_trace) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", d, v);
      csv += buf;
    }
    write_text(out, csv);
  } else {
    write_text(out, report::dump_json(j));
  }
  if (spectral::is_member(rep.verdict)) return 0;
  return rep.verdict == spectral::Verdict::NonMember ? kExitNonMember : kExitInconclusive;
}

int cmd_simulate(const std::string& ic_spec, double omega, double T, double dt,
                 const std::string& solver, const std::string& indices_csv,
                 const std::string& out_dir, const json& cfg) {
  lattice::InitialCondition ic;
  std::vector<long> indices;
  try {
    ic = lattice::parse_ic_spec(ic_spec);
    indices = parse_indices(indices_csv);
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return kExitBadInput;
  }

  std::vector<double> times;
  const double dt_report = 0.1;
  for (double t = 0.0; t <= T + 1e-9; t += dt_report) times.push_back(t);

  dynamics::Trajectory tr;
  try {
    if (solver == "ode" || solver == "auto") {
      dynamics::OdeOptions opt;
      opt.record_dt = dt_report;
      if (dt > 0.0) opt.dt = dt;
      const long k_lo = *std::min_element(indices.begin(), indices.end());
      const long k_hi = *std::max_element(indices.begin(), indices.end());
      tr = dynamics::solve_ode(ic, omega, T, opt.dt, k_lo, k_hi, opt);
    } else if (solver == "spectral") {
      tr = dynamics::solve_spectral(ic, omega, times, indices);
    } else if (solver == "bessel") {
      if (ic.rule != lattice::Rule::Sign) {
        std::cerr << "simulate: the bessel series applies to --ic sign only; "
                     "try --solver ode or spectral\n";
        return kExitSolverMismatch;
      }
      tr = dynamics::solve_bessel_sign_trajectory(omega, times, indices);
    } else if (solver == "closed-form") {
      if (!dynamics::has_closed_form(ic)) {
        std::cerr << "simulate: no closed form for this initial condition; "
                     "try --solver ode\n";
        return kExitSolverMismatch;
      }
      tr = dynamics::solve_closed_form(ic, omega, times, indices);
    } else {
      std::cerr << "simulate: unknown solver '" << solver << "'\n";
      return kExitBadInput;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return kExitSolverMismatch;
  }

  ordered_json meta;
  meta["command"] = "simulate";
  meta["config"] =
      ordered_json{{"ic", lattice::to_json(ic)}, {"omega", omega},
                   {"T", T},                     {"solver", solver},
                   {"indices", indices_csv},     {"dt", tr.dt},
                   {"record_dt", dt_report}};
  if (cfg.is_object() && !cfg.empty()) meta["config"]["file"] = cfg;
  meta["solver_used"] = dynamics::solver_name(tr.solver);
  meta["window"] = {{"k_lo", tr.k_lo}, {"k_hi", tr.k_hi}};
  meta["truncation_half_width"] = tr.half_width;
  meta["margin"] = tr.margin;
  meta["energy_drift_rel"] = tr.energy_drift_rel;
  meta["rows"] = tr.times.size();

  fs::create_directories(out_dir);
  write_text(out_dir + "/run.json", report::dump_json(meta));

  const std::string header = "# " + meta["config"].dump() + "\n";
  {
    std::string csv = header + "t,k,q\n";
    char buf[96];
    for (std::size_t ti = 0; ti < tr.times.size(); ++ti) {
      for (long k : indices) {
        std::snprintf(buf, sizeof(buf), "%.17g,%ld,%.17g\n", tr.times[ti], k,
                      tr.at(ti, k));
        csv += buf;
      }
    }
    write_text(out_dir + "/trajectory.csv", csv);
  }
  for (long k : indices) {
    std::string dat = header;
    char buf[80];
    for (std::size_t ti = 0; ti < tr.times.size(); ++ti) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", tr.times[ti], tr.at(ti, k));
      dat += buf;
    }
    write_text(out_dir + "/q_" + std::to_string(k) + ".dat", dat);
  }
  std::cout << "wrote " << out_dir << "/run.json, trajectory.csv and " << indices.size()
            << " plot files\n";
  return 0;
}

int cmd_spectrum(const std::string& ic_spec, long window, const std::string& out,
                 const std::string& csv_out, const json& cfg) {
  lattice::InitialCondition ic;
  try {
    ic = lattice::parse_ic_spec(ic_spec);
  } catch (const std::exception& e) {
    std::cerr << "spectrum: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (window > 0) ic.window = window;
  const auto profile = spectral::make_profile(ic);
  ordered_json j;
  j["command"] = "spectrum";
  j["config"] = ordered_json{{"ic", lattice::to_json(ic)}};
  if (cfg.is_object() && !cfg.empty()) j["config"]["file"] = cfg;
  j["profile"] = spectral::to_json(profile);
  write_text(out, report::dump_json(j));
  if (!csv_out.empty())
    write_text(csv_out, "# " + j["config"].dump() + "\n" + spectral::to_csv(profile));
  return 0;
}

int cmd_limits(const std::string& ic_spec, long window, const std::string& out,
               const json& cfg) {
  lattice::InitialCondition ic;
  try {
    ic = lattice::parse_ic_spec(ic_spec);
  } catch (const std::exception& e) {
    std::cerr << "limits: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (window > 0) ic.window = window;
  try {
    const auto lim = spectral::limits_and_nu(ic);
    ordered_json j;
    j["command"] = "limits";
    j["config"] = ordered_json{{"ic", lattice::to_json(ic)}};
    if (cfg.is_object() && !cfg.empty()) j["config"]["file"] = cfg;
    j["L_plus"] = lim.L_plus;
    j["L_minus"] = lim.L_minus;
    j["nu"] = lim.nu;
    j["c"] = lim.c;
    j["A"] = lim.A;
    ordered_json probes = ordered_json::array();
    for (const auto& [n, c] : lim.probes) probes.push_back({{"n", n}, {"c", c}});
    j["probes"] = probes;
    write_text(out, report::dump_json(j));
    return 0;
  } catch (const spectral::inconclusive_error& e) {
    std::cerr << "limits: " << e.what() << "\n";
    const auto rep = spectral::classify(ic);
    return rep.verdict == spectral::Verdict::NonMember ? kExitNonMember
                                                       : kExitInconclusive;
  }
}

int cmd_bounds(const std::string& target, const std::string& n_range,
               const std::string& t_range, int n_step, double t_step,
               const std::string& regime_name, const std::string& gamma_csv,
               const std::string& ic_spec, double omega, const std::string& indices_csv,
               const std::string& out, const std::string& csv_out, const json& cfg) {
  report::BoundSweepReport rep;
  std::optional<report::BoundSweepReport> second;
  double n_lo = 0.0, t_lo = 0.0;
  int n_max = 0;
  double t_max = 0.0;
  try {
    const auto [nl, nh] = parse_range(n_range);
    const auto [tl, th] = parse_range(t_range);
    n_lo = nl;
    n_max = static_cast<int>(nh);
    t_lo = tl;
    t_max = th;
  } catch (const std::exception&) {
    std::cerr << "bounds: cannot parse --n-range/--t-range\n";
    return kExitBadInput;
  }
  try {
    if (target == "trajectory_sup") {
      const auto ic = lattice::parse_ic_spec(ic_spec);
      rep = dynamics::boundedness_sweep(ic, omega, t_max, parse_indices(indices_csv));
    } else if (target == "I_n") {
      rep = bounds::sweep_I(n_max, n_step, t_max, t_step);
    } else if (target == "C_n") {
      rep = bounds::sweep_C(n_max, n_step, t_max, t_step);
    } else if (target == "G_n") {
      rep = bounds::sweep_G(n_max, n_step, t_max, t_step);
    } else if (target == "alt_sums") {
      auto [odd, even] = bounds::sweep_alt(n_max, n_step, t_max, t_step);
      rep = std::move(odd);
      second = std::move(even);
    } else if (target == "V_n") {
      rep.target = report::Target::Vn;
      rep.quantity = "V_n / (n ln n)";
      for (int n = 2; n <= n_max; n += n_step) {
        rep.grid.push_back({static_cast<double>(n), 0.0});
        rep.values.push_back(bounds::eval_V(n) / (n * std::log(static_cast<double>(n))));
      }
      rep.finalize();
      rep.verdict = report::SweepVerdict::INFORMATIONAL;
    } else if (target == "main_gest") {
      rep.target = report::Target::MainGest;
      rep.quantity = "int_0^pi (1-cos(t sin(l/2)))/sin(l/2) sin(nl) dl";
      for (int n = n_step; n <= n_max; n += n_step)
        for (double t = 0.0; t <= t_max + 1e-9; t += t_step) {
          rep.grid.push_back({static_cast<double>(n), t});
          rep.values.push_back(bounds::eval_main_gest(n, t));
        }
      rep.finalize();
      rep.verdict = report::SweepVerdict::INFORMATIONAL;
    } else if (target == "regime") {
      bounds::Regime reg;
      if (regime_name == "below-gamma1") {
        reg = bounds::Regime::BelowGamma1;
      } else if (regime_name == "above-gamma2") {
        reg = bounds::Regime::AboveGamma2;
      } else if (regime_name == "gamma1-to-1") {
        reg = bounds::Regime::Gamma1ToOne;
      } else if (regime_name == "1-to-gamma2") {
        reg = bounds::Regime::OneToGamma2;
      } else {
        std::cerr << "bounds: unknown regime '" << regime_name
                  << "' (below-gamma1, above-gamma2, gamma1-to-1, 1-to-gamma2)\n";
        return kExitBadInput;
      }
      std::vector<double> gammas;
      std::stringstream ss(gamma_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) gammas.push_back(std::stod(tok));
      std::vector<double> ns;
      for (int n = std::max(n_step, 2); n <= n_max; n += n_step) ns.push_back(n);
      rep = bounds::regime_sweep(reg, ns, gammas);
    } else {
      std::cerr << "bounds: unknown target '" << target
                << "' (I_n, C_n, G_n, V_n, alt_sums, main_gest, regime, "
                   "trajectory_sup)\n";
      return kExitBadInput;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "bounds: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "bounds: " << e.what() << "\n";
    return kExitNumericFault;
  }

  if ((n_lo > 0.0 || t_lo > 0.0) && target != "regime" && target != "trajectory_sup") {
    try {
      clip_report(rep, n_lo, n_max, t_lo, t_max);
      if (second) clip_report(*second, n_lo, n_max, t_lo, t_max);
    } catch (const std::invalid_argument& e) {
      std::cerr << "bounds: " << e.what() << "\n";
      return kExitBadInput;
    }
  }

  ordered_json j;
  j["command"] = "bounds";
  j["config"] = ordered_json{{"target", target},   {"n_range", n_range},
                             {"n_step", n_step},   {"t_range", t_range},
                             {"t_step", t_step},   {"regime", regime_name},
                             {"gamma", gamma_csv}};
  if (cfg.is_object() && !cfg.empty()) j["config"]["file"] = cfg;
  j["report"] = report::to_json(rep);
  if (second) j["report_even_sums"] = report::to_json(*second);
  write_text(out, report::dump_json(j));
  if (!csv_out.empty()) {
    write_text(csv_out, "# " + j["config"].dump() + "\n" + report::to_csv(rep));
    if (second)
      write_text(csv_out + ".even",
                 "# " + j["config"].dump() + "\n" + report::to_csv(*second));
  }
  return rep.verdict == report::SweepVerdict::FAIL ? 1 : 0;
}

int cmd_bessel(int n_max, int n_step, double t_max, double t_step, const std::string& out,
               const std::string& csv_out, const json& cfg) {
  if (n_max < 0 || n_step < 1 || t_step <= 0.0) {
    std::cerr << "bessel: bad grid\n";
    return kExitBadInput;
  }
  const auto g_rep = bounds::sweep_G(n_max, n_step, t_max, t_step);
  double j_sup = 0.0;
  report::GridPoint j_arg;
  std::string csv = "n,t,J_n,G_n\n";
  char buf[128];
  std::size_t row = 0;
  const int nt = static_cast<int>(std::floor(t_max / t_step + 1e-9)) + 1;
  for (int ti = 0; ti < nt; ++ti) {
    const double t = ti * t_step;
    const auto col = bessel::j_column(n_max, t);
    for (int n = 0; n <= n_max; n += n_step) {
      const double jv = col[static_cast<std::size_t>(n)];
      if (std::abs(jv) > j_sup) {
        j_sup = std::abs(jv);
        j_arg = {static_cast<double>(n), t};
      }
      std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", n, t, jv,
                    g_rep.values.at(row));
      csv += buf;
      ++row;
    }
  }
  ordered_json j;
  j["command"] = "bessel";
  j["config"] = ordered_json{
      {"n_max", n_max}, {"n_step", n_step}, {"t_max", t_max}, {"t_step", t_step}};
  if (cfg.is_object() && !cfg.empty()) j["config"]["file"] = cfg;
  j["sup_abs_J"] = j_sup;
  j["argmax_J"] = {{"n", j_arg.a}, {"t", j_arg.b}};
  j["sup_abs_G"] = g_rep.empirical_sup;
  j["argmax_G"] = {{"n", g_rep.argmax.a}, {"t", g_rep.argmax.b}};
  write_text(out, report::dump_json(j));
  if (!csv_out.empty()) write_text(csv_out, "# " + j["config"].dump() + "\n" + csv);
  return 0;
}

int cmd_verify(const std::string& out) {
  const auto results = acceptance::run_all();
  int failures = 0;
  ordered_json rows = ordered_json::array();
  for (const auto& r : results) {
    std::printf("%s  [%2d] %-36s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"seconds", r.seconds},
                    {"detail", r.detail}});
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  if (!out.empty() && out != "-") {
    ordered_json j;
    j["command"] = "verify";
    j["criteria"] = rows;
    j["pass"] = failures == 0;
    write_text(out, report::dump_json(j));
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "harmonic: infinite harmonic chain trajectories, l^Delta classification,\n"
      "limit constants, and uniform-boundedness sweeps"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --config appear after the subcommand name

  std::string config_path;
  app.add_option("--config", config_path, "JSON file with option defaults");

  std::string ic_spec = "sign";
  long window = 0;
  std::string out = "-";
  std::string verify_out;
  std::string csv_out;
  std::string format = "json";
  double omega = 1.0, T = 50.0, dt = 0.0;
  std::string solver = "auto";
  std::string indices = "1,10,20";
  std::string out_dir = "harmonic-out";
  std::string target = "G_n";
  int n_max = 200, n_step = 1;
  double t_max = 400.0, t_step = 0.5;
  std::string n_range = "200", t_range = "400";
  std::string regime = "below-gamma1";
  std::string gammas = "0.1,0.3,0.5";

  auto* c_classify = app.add_subcommand("classify", "l^Delta membership verdict");
  c_classify->add_option("--ic", ic_spec, "initial condition (name[:param] or JSON)");
  c_classify->add_option("--window", window, "evaluation half-width");
  c_classify->add_option("--out", out, "output path ('-' = stdout)");
  c_classify->add_option("--format", format, "json or csv");

  auto* c_sim = app.add_subcommand("simulate", "trajectory files for chosen indices");
  c_sim->add_option("--ic", ic_spec, "initial condition");
  c_sim->add_option("--omega", omega, "coupling");
  c_sim->add_option("--T", T, "time horizon");
  c_sim->add_option("--dt", dt, "integrator step (0 = default)");
  c_sim->add_option("--solver", solver, "auto|ode|spectral|bessel|closed-form");
  c_sim->add_option("--indices", indices, "comma list or a..b ranges");
  c_sim->add_option("--out", out_dir, "output directory");

  auto* c_spec = app.add_subcommand("spectrum", "Q^Delta, A and phi+- profile");
  c_spec->add_option("--ic", ic_spec, "initial condition");
  c_spec->add_option("--window", window, "evaluation half-width");
  c_spec->add_option("--out", out, "JSON profile path");
  c_spec->add_option("--csv", csv_out, "CSV profile path");

  auto* c_lim = app.add_subcommand("limits", "L+, L-, nu of a member sequence");
  c_lim->add_option("--ic", ic_spec, "initial condition");
  c_lim->add_option("--window", window, "evaluation half-width");
  c_lim->add_option("--out", out, "output path");

  auto* c_bounds = app.add_subcommand("bounds", "oscillatory-integral sweeps");
  c_bounds->add_option("--target", target,
                       "I_n|C_n|G_n|V_n|alt_sums|main_gest|regime|trajectory_sup");
  c_bounds->add_option("--n-range,--n-max", n_range, "orders: hi or lo..hi");
  c_bounds->add_option("--n-step", n_step, "order stride");
  c_bounds->add_option("--t-range,--t-max", t_range, "times: hi or lo..hi");
  c_bounds->add_option("--t-step", t_step, "time stride");
  c_bounds->add_option("--regime", regime,
                       "below-gamma1|gamma1-to-1|1-to-gamma2|above-gamma2");
  c_bounds->add_option("--gamma", gammas, "comma list of gamma = t/n values");
  c_bounds->add_option("--ic", ic_spec, "initial condition (trajectory_sup)");
  c_bounds->add_option("--omega", omega, "coupling (trajectory_sup)");
  c_bounds->add_option("--indices", indices, "report indices (trajectory_sup)");
  c_bounds->add_option("--out", out, "JSON report path");
  c_bounds->add_option("--csv", csv_out, "also dump the grid as CSV");

  auto* c_bessel = app.add_subcommand("bessel", "J_n / G_n tables and sups");
  c_bessel->add_option("--n-max", n_max, "largest order");
  c_bessel->add_option("--n-step", n_step, "order stride");
  c_bessel->add_option("--t-max", t_max, "largest time");
  c_bessel->add_option("--t-step", t_step, "time stride");
  c_bessel->add_option("--out", out, "JSON summary path");
  c_bessel->add_option("--csv", csv_out, "CSV table path");

  auto* c_verify = app.add_subcommand("verify", "run the full acceptance suite");
  c_verify->add_option("--out", verify_out, "JSON results path");

  json cfg = json::object();
  try {
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--config") cfg = load_config(argv[i + 1]);
    from_config(cfg, "ic", ic_spec);
    from_config(cfg, "window", window);
    from_config(cfg, "omega", omega);
    from_config(cfg, "T", T);
    from_config(cfg, "dt", dt);
    from_config(cfg, "solver", solver);
    from_config(cfg, "indices", indices);
    from_config(cfg, "target", target);
    from_config(cfg, "n_max", n_max);
    from_config(cfg, "n_step", n_step);
    from_config(cfg, "t_max", t_max);
    from_config(cfg, "t_step", t_step);
    if (cfg.contains("n_range"))
      n_range = cfg["n_range"].is_string() ? cfg["n_range"].get<std::string>()
                                           : cfg["n_range"].dump();
    if (cfg.contains("t_range"))
      t_range = cfg["t_range"].is_string() ? cfg["t_range"].get<std::string>()
                                           : cfg["t_range"].dump();
    from_config(cfg, "regime", regime);
    from_config(cfg, "gamma", gammas);
    from_config(cfg, "format", format);

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "harmonic: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(ic_spec, window, out, format, cfg);
    if (c_sim->parsed())
      return cmd_simulate(ic_spec, omega, T, dt, solver, indices, out_dir, cfg);
    if (c_spec->parsed()) return cmd_spectrum(ic_spec, window, out, csv_out, cfg);
    if (c_lim->parsed()) return cmd_limits(ic_spec, window, out, cfg);
    if (c_bounds->parsed())
      return cmd_bounds(target, n_range, t_range, n_step, t_step, regime, gammas,
                        ic_spec, omega, indices, out, csv_out, cfg);
    if (c_bessel->parsed())
      return cmd_bessel(n_max, n_step, t_max, t_step, out, csv_out, cfg);
    if (c_verify->parsed()) return cmd_verify(verify_out);
  } catch (const spectral::inconclusive_error& e) {
    std::cerr << "harmonic: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "harmonic: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "harmonic: " << e.what() << "\n";
    return kExitNumericFault;
  }
  return 0;
}
