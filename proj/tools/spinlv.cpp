// Copyright 2026 The spinlv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// spinlv command-line front end. Parameters come from built-in defaults,
// then an optional JSON config file, then flags; flags win.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinlv/cli.hpp"

namespace {

using nlohmann::json;

struct PendingConfig {
  std::string config_path;
  json overrides = json::object();

  // Merged configuration; flag overrides win over the file.
  json merge(std::ostream& err, bool& ok) const {
    json cfg = json::object();
    ok = true;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) {
        err << R"({"error":{"message":"cannot read config file )" << config_path
            << R"("}})" << "\n";
        ok = false;
        return cfg;
      }
      try {
        f >> cfg;
      } catch (const std::exception& e) {
        err << R"({"error":{"message":"config parse error: )" << e.what()
            << R"("}})" << "\n";
        ok = false;
        return cfg;
      }
    }
    for (const auto& [k, v] : overrides.items()) {
      cfg[k] = v;
    }
    return cfg;
  }
};

void add_common(CLI::App* cmd, PendingConfig& pending) {
  cmd->add_option_function<std::string>(
         "--config", [&pending](const std::string& v) { pending.config_path = v; },
         "JSON config file; flags override its values");
  cmd->add_option_function<long long>(
         "--seed", [&pending](long long v) { pending.overrides["seed"] = v; },
         "random seed");
  cmd->add_option_function<std::string>(
         "--out", [&pending](const std::string& v) { pending.overrides["out"] = v; },
         "output path (or path prefix)");
}

void opt_num(CLI::App* cmd, PendingConfig& pending, const std::string& flag,
             const std::string& key, const std::string& help) {
  cmd->add_option_function<double>(
      flag, [&pending, key](double v) { pending.overrides[key] = v; }, help);
}

void opt_int(CLI::App* cmd, PendingConfig& pending, const std::string& flag,
             const std::string& key, const std::string& help) {
  cmd->add_option_function<long long>(
      flag, [&pending, key](long long v) { pending.overrides[key] = v; }, help);
}

void opt_str(CLI::App* cmd, PendingConfig& pending, const std::string& flag,
             const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&pending, key](const std::string& v) { pending.overrides[key] = v; },
      help);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-J interferometry simulator and precision-metrology toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  using Runner = std::function<int(const json&, std::ostream&, std::ostream&)>;

  auto wire = [&](CLI::App* cmd, PendingConfig& pending, Runner runner) {
    cmd->callback([&pending, runner, &exit_code]() {
      bool ok = true;
      const json cfg = pending.merge(std::cerr, ok);
      exit_code = ok ? runner(cfg, std::cout, std::cerr) : 1;
    });
  };

  // check-identities
  static PendingConfig p_check;
  CLI::App* check = app.add_subcommand(
      "check-identities", "verify the beamsplitter operator identities");
  add_common(check, p_check);
  check->add_option_function<std::vector<double>>(
      "--j-list",
      [](const std::vector<double>& v) { p_check.overrides["j_list"] = v; },
      "spin values to verify");
  check->add_option_function<std::vector<double>>(
      "--kappa-t",
      [](const std::vector<double>& v) { p_check.overrides["kappa_t_list"] = v; },
      "dimensionless kappa*t values");
  opt_int(check, p_check, "--phi-points", "phi_points", "phase grid size");
  opt_num(check, p_check, "--tolerance", "tolerance", "max-norm tolerance");
  wire(check, p_check, spinlv::cli::run_check_identities);

  // simulate-ramsey
  static PendingConfig p_sim;
  CLI::App* sim = app.add_subcommand("simulate-ramsey",
                                     "generate an interferometry fringe");
  add_common(sim, p_sim);
  opt_num(sim, p_sim, "--j", "j", "spin quantum number");
  opt_num(sim, p_sim, "--kappa", "kappa", "coupling, rad/s");
  opt_num(sim, p_sim, "--t", "t", "free-evolution time, s");
  opt_num(sim, p_sim, "--phi-start", "phi_start", "phase grid start, rad");
  opt_num(sim, p_sim, "--phi-stop", "phi_stop", "phase grid stop, rad (exclusive)");
  opt_int(sim, p_sim, "--phi-points", "phi_points", "phase grid size");
  opt_int(sim, p_sim, "--shots", "shots", "shots per grid point (0 = exact only)");
  opt_str(sim, p_sim, "--initial", "initial", "initial state: stretched|pair");
  opt_num(sim, p_sim, "--m1", "m1", "first pair projection");
  opt_num(sim, p_sim, "--m2", "m2", "second pair projection");
  opt_str(sim, p_sim, "--readout", "readout", "readout basis: jz|pair");
  opt_str(sim, p_sim, "--sequence", "sequence", "pulse sequence: ramsey|free");
  wire(sim, p_sim, spinlv::cli::run_simulate_ramsey);

  // sql-scan
  static PendingConfig p_sql;
  CLI::App* sql = app.add_subcommand(
      "sql-scan", "scan estimator uncertainty against ensemble size");
  add_common(sql, p_sql);
  sql->add_option_function<std::vector<long long>>(
      "--n-list",
      [](const std::vector<long long>& v) { p_sql.overrides["n_list"] = v; },
      "ensemble sizes");
  opt_num(sql, p_sql, "--j", "j", "spin quantum number");
  opt_num(sql, p_sql, "--m1", "m1", "first pair projection");
  opt_num(sql, p_sql, "--m2", "m2", "second pair projection");
  opt_num(sql, p_sql, "--t", "t", "free-evolution time, s");
  opt_num(sql, p_sql, "--kappa-true", "kappa_true", "true coupling, rad/s");
  opt_int(sql, p_sql, "--trials", "trials", "Monte-Carlo trials per N");
  opt_int(sql, p_sql, "--shots-per-atom", "shots_per_atom",
          "shots per atom per grid point");
  opt_int(sql, p_sql, "--phi-points", "phi_points", "phase grid size");
  opt_num(sql, p_sql, "--kappa-min", "kappa_min", "search window lower edge");
  opt_num(sql, p_sql, "--kappa-max", "kappa_max", "search window upper edge");
  opt_int(sql, p_sql, "--kappa-grid-points", "kappa_grid_points",
          "search grid size");
  wire(sql, p_sql, spinlv::cli::run_sql_scan);

  // constrain-eep
  static PendingConfig p_eep;
  CLI::App* eep = app.add_subcommand(
      "constrain-eep", "convert an energy-shift bound into violation parameters");
  add_common(eep, p_eep);
  opt_num(eep, p_eep, "--c02", "c02", "anisotropy coefficient");
  opt_num(eep, p_eep, "--freq-factor", "freq_factor_hz", "sensitivity factor, Hz");
  opt_num(eep, p_eep, "--delta-m-sq", "delta_m_sq",
          "m^2 difference of the state pair (affects kappa only)");
  opt_int(eep, p_eep, "--n", "n", "oscillator level");
  opt_num(eep, p_eep, "--omega0", "omega0", "trap frequency");
  opt_str(eep, p_eep, "--omega-unit", "omega_unit", "omega0 unit: rad_s|hz");
  opt_num(eep, p_eep, "--mass", "mass_kg", "atom mass, kg");
  opt_num(eep, p_eep, "--mu", "mu_nuclear_magnetons",
          "magnetic moment, nuclear magnetons");
  opt_num(eep, p_eep, "--b-field", "b_field_t", "magnetic field, T");
  opt_num(eep, p_eep, "--window-lo", "window_lo_J", "paper window lower edge, J");
  opt_num(eep, p_eep, "--window-hi", "window_hi_J", "paper window upper edge, J");
  opt_num(eep, p_eep, "--tolerance", "classifier_tol_J",
          "violation classifier tolerance, J");
  wire(eep, p_eep, spinlv::cli::run_constrain_eep);

  // locality-demo
  static PendingConfig p_loc;
  CLI::App* loc = app.add_subcommand(
      "locality-demo", "entanglement invariance under the local coupling");
  add_common(loc, p_loc);
  opt_num(loc, p_loc, "--j", "j", "spin quantum number per atom");
  opt_str(loc, p_loc, "--state", "state", "two-atom state: bell|plus-product|random");
  opt_num(loc, p_loc, "--kappa", "kappa", "coupling, rad/s");
  opt_num(loc, p_loc, "--t", "t", "evolution time, s");
  wire(loc, p_loc, spinlv::cli::run_locality_demo);

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
