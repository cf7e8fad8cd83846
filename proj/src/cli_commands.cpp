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

#include "spinlv/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinlv/constants.hpp"
#include "spinlv/eep.hpp"
#include "spinlv/fringe.hpp"
#include "spinlv/lv_model.hpp"
#include "spinlv/metrology.hpp"
#include "spinlv/pulses.hpp"
#include "spinlv/rng.hpp"
#include "spinlv/spin_ops.hpp"

namespace spinlv::cli {
namespace {

using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind { Number, Integer, String, NumberArray, IntegerArray };

struct KeySpec {
  const char* key;
  Kind kind;
};

void validate_config(const json& cfg, const char* command,
                     std::initializer_list<KeySpec> keys) {
  if (!cfg.is_object()) {
    throw ConfigError("configuration must be a JSON object");
  }
  for (const auto& [key, value] : cfg.items()) {
    const KeySpec* spec = nullptr;
    for (const KeySpec& s : keys) {
      if (key == s.key) {
        spec = &s;
        break;
      }
    }
    if (spec == nullptr) {
      throw ConfigError(std::string("unknown key '") + key + "' for command " +
                        command);
    }
    bool ok = false;
    switch (spec->kind) {
      case Kind::Number: ok = value.is_number(); break;
      case Kind::Integer: ok = value.is_number_integer(); break;
      case Kind::String: ok = value.is_string(); break;
      case Kind::NumberArray:
        ok = value.is_array();
        if (ok) {
          for (const auto& v : value) ok = ok && v.is_number();
        }
        break;
      case Kind::IntegerArray:
        ok = value.is_array();
        if (ok) {
          for (const auto& v : value) ok = ok && v.is_number_integer();
        }
        break;
    }
    if (!ok) {
      throw ConfigError("key '" + key + "' has the wrong type");
    }
  }
}

double num(const json& cfg, const char* key, double fallback) {
  return cfg.contains(key) ? cfg.at(key).get<double>() : fallback;
}

std::int64_t integer(const json& cfg, const char* key, std::int64_t fallback) {
  return cfg.contains(key) ? cfg.at(key).get<std::int64_t>() : fallback;
}

std::string str(const json& cfg, const char* key, const std::string& fallback) {
  return cfg.contains(key) ? cfg.at(key).get<std::string>() : fallback;
}

std::uint64_t seed_of(const json& cfg) {
  return static_cast<std::uint64_t>(integer(cfg, "seed", 1));
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw ConfigError("cannot open '" + path + "' for writing");
  }
  f << body;
  if (!f.good()) {
    throw ConfigError("failed writing '" + path + "'");
  }
}

int fail(std::ostream& err, const char* command, const std::string& message) {
  json e;
  e["error"] = {{"command", command}, {"message", message}};
  err << e.dump() << "\n";
  return 1;
}

// 10^round(log10 |x|); 0 for x == 0.
double order_of_magnitude(double x) {
  if (x == 0.0) {
    return 0.0;
  }
  return std::pow(10.0, std::round(std::log10(std::abs(x))));
}

bool order_in_window(double x, double lo, double hi) {
  const double oom = order_of_magnitude(x);
  return oom > 0.0 && oom >= lo * (1.0 - 1e-9) && oom <= hi * (1.0 + 1e-9);
}

std::vector<double> linspace_exclusive(double start, double stop, int points) {
  if (points < 1) {
    throw ConfigError("phi_points must be >= 1");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = start + (stop - start) * i / points;
  }
  return grid;
}

} // namespace

json constants_block() {
  return json{
      {"constants_version", constants::kVersion},
      {"rng_algorithm", rng::kAlgorithm},
      {"hbar_J_s", constants::kHbar},
      {"h_J_s", constants::kPlanck},
      {"c_m_s", constants::kSpeedOfLight},
      {"mu_N_J_T", constants::kNuclearMagneton},
      {"m_e_kg", constants::kElectronMass},
      {"m_yb171_kg", constants::kMassYb171},
  };
}

int run_check_identities(const json& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg, "check-identities",
                    {{"j_list", Kind::NumberArray},
                     {"phi_points", Kind::Integer},
                     {"kappa_t_list", Kind::NumberArray},
                     {"tolerance", Kind::Number},
                     {"out", Kind::String}});
    std::vector<double> j_list = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
    if (cfg.contains("j_list")) {
      j_list = cfg.at("j_list").get<std::vector<double>>();
    }
    if (j_list.empty()) {
      throw ConfigError("j_list must not be empty");
    }
    std::vector<double> kappa_t_list = {0.1, 1.0, 10.0};
    if (cfg.contains("kappa_t_list")) {
      kappa_t_list = cfg.at("kappa_t_list").get<std::vector<double>>();
    }
    const int phi_points = static_cast<int>(integer(cfg, "phi_points", 50));
    const double tol = num(cfg, "tolerance", 1e-10);
    if (phi_points < 2 || !(tol > 0.0)) {
      throw ConfigError("phi_points must be >= 2 and tolerance positive");
    }

    json cases = json::array();
    double overall = 0.0;
    for (double jv : j_list) {
      const SpinOperators ops = make_spin_ops(SpinQuantumNumber(jv));
      double worst7 = 0.0;
      for (int i = 0; i < phi_points; ++i) {
        const double phi = 2.0 * constants::kPi * i / phi_points;
        CMatrix direct = expm_hermitian(cplx{phi, 0.0} * ops.jy, 1.0);
        worst7 = std::max(worst7, max_abs_diff(ramsey_unitary(ops, phi), direct));
      }
      cases.push_back(json{{"j", jv}, {"identity", "ramsey"}, {"max_norm", worst7}});
      overall = std::max(overall, worst7);

      for (double kt : kappa_t_list) {
        double worst8 = 0.0;
        for (int i = 0; i < phi_points; ++i) {
          const double phi = 2.0 * constants::kPi * i / phi_points;
          CMatrix exponent = cplx{phi, 0.0} * ops.jy +
                             cplx{kt, 0.0} * (ops.jy * ops.jy);
          CMatrix direct = expm_hermitian(exponent, 1.0);
          worst8 = std::max(
              worst8, max_abs_diff(ramsey_lv_unitary(ops, phi, kt, 1.0), direct));
        }
        cases.push_back(json{{"j", jv},
                             {"identity", "ramsey_lv"},
                             {"kappa_t", kt},
                             {"max_norm", worst8}});
        overall = std::max(overall, worst8);
      }
    }

    json report;
    report["command"] = "check-identities";
    report["tolerance"] = tol;
    report["phi_points"] = phi_points;
    report["cases"] = cases;
    report["overall_max_norm"] = overall;
    report["pass"] = overall <= tol;
    report["constants"] = constants_block();

    const std::string body = report.dump(2) + "\n";
    if (cfg.contains("out")) {
      write_text_file(cfg.at("out").get<std::string>(), body);
    }
    out << body;
    if (overall > tol) {
      json e;
      e["error"] = {{"command", "check-identities"},
                    {"message", "identity max norm exceeds tolerance"},
                    {"overall_max_norm", overall},
                    {"tolerance", tol}};
      err << e.dump() << "\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, "check-identities", e.what());
  }
}

int run_simulate_ramsey(const json& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg, "simulate-ramsey",
                    {{"j", Kind::Number},
                     {"kappa", Kind::Number},
                     {"t", Kind::Number},
                     {"phi_start", Kind::Number},
                     {"phi_stop", Kind::Number},
                     {"phi_points", Kind::Integer},
                     {"shots", Kind::Integer},
                     {"seed", Kind::Integer},
                     {"initial", Kind::String},
                     {"m1", Kind::Number},
                     {"m2", Kind::Number},
                     {"readout", Kind::String},
                     {"sequence", Kind::String},
                     {"out", Kind::String}});
    if (!cfg.contains("out")) {
      throw ConfigError("simulate-ramsey requires an output path ('out')");
    }
    const SpinQuantumNumber j(num(cfg, "j", 0.5));
    const double kappa = num(cfg, "kappa", 0.0);
    const double t = num(cfg, "t", 1.0);
    const std::int64_t shots = integer(cfg, "shots", 0);
    if (shots < 0) {
      throw ConfigError("shots must be >= 0");
    }
    const std::uint64_t seed = seed_of(cfg);
    const std::vector<double> grid =
        linspace_exclusive(num(cfg, "phi_start", 0.0),
                           num(cfg, "phi_stop", 2.0 * constants::kPi),
                           static_cast<int>(integer(cfg, "phi_points", 64)));

    const SpinOperators ops = make_spin_ops(j);

    const std::string initial_kind = str(cfg, "initial", "stretched");
    CVector initial;
    std::string initial_label;
    double m1 = 0.0, m2 = 0.0;
    if (initial_kind == "stretched") {
      initial = basis_state(j, j.value());
      initial_label = "stretched";
    } else if (initial_kind == "pair") {
      if (!cfg.contains("m1") || !cfg.contains("m2")) {
        throw ConfigError("initial 'pair' requires m1 and m2");
      }
      m1 = cfg.at("m1").get<double>();
      m2 = cfg.at("m2").get<double>();
      initial = superposition_state(j, m1, m2);
      initial_label = "pair";
    } else {
      throw ConfigError("initial must be 'stretched' or 'pair'");
    }

    const std::string readout = str(cfg, "readout", "jz");
    CMatrix basis;
    if (readout == "pair") {
      if (!cfg.contains("m1") || !cfg.contains("m2")) {
        throw ConfigError("readout 'pair' requires m1 and m2");
      }
      basis = pair_readout_basis(j, cfg.at("m1").get<double>(),
                                 cfg.at("m2").get<double>());
    } else if (readout != "jz") {
      throw ConfigError("readout must be 'jz' or 'pair'");
    }

    const std::string seq_kind = str(cfg, "sequence", "ramsey");
    PulseSequence seq;
    if (seq_kind == "ramsey") {
      seq = ramsey_sequence(t, 0.0, kappa);
    } else if (seq_kind == "free") {
      seq = free_precession_sequence(t, kappa);
    } else {
      throw ConfigError("sequence must be 'ramsey' or 'free'");
    }

    FringeModel model(ops, seq, initial, basis);
    FringeRecord rec =
        generate_fringe(model, grid, static_cast<std::uint64_t>(shots), seed);
    rec.meta.j = j.value();
    rec.meta.kappa_rad_s = kappa;
    rec.meta.initial_label = initial_label;
    rec.meta.basis_label = readout;

    const std::string prefix = cfg.at("out").get<std::string>();
    std::ostringstream csv;
    write_fringe_csv(rec, csv);
    write_text_file(prefix + ".csv", csv.str());

    json doc = fringe_json(rec);
    doc["constants"] = constants_block();
    write_text_file(prefix + ".json", doc.dump(2) + "\n");

    out << "wrote " << prefix << ".csv and " << prefix << ".json\n";
    return 0;
  } catch (const std::exception& e) {
    return fail(err, "simulate-ramsey", e.what());
  }
}

int run_sql_scan(const json& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg, "sql-scan",
                    {{"j", Kind::Number},
                     {"m1", Kind::Number},
                     {"m2", Kind::Number},
                     {"t", Kind::Number},
                     {"kappa_true", Kind::Number},
                     {"n_list", Kind::IntegerArray},
                     {"trials", Kind::Integer},
                     {"shots_per_atom", Kind::Integer},
                     {"phi_points", Kind::Integer},
                     {"kappa_min", Kind::Number},
                     {"kappa_max", Kind::Number},
                     {"kappa_grid_points", Kind::Integer},
                     {"seed", Kind::Integer},
                     {"out", Kind::String}});
    if (!cfg.contains("out")) {
      throw ConfigError("sql-scan requires an output path ('out')");
    }
    EstimationProtocol proto;
    proto.j = SpinQuantumNumber(num(cfg, "j", 3.5));
    proto.m1 = num(cfg, "m1", -3.5);
    proto.m2 = num(cfg, "m2", -0.5);
    proto.t_s = num(cfg, "t", 1.0);
    proto.phi_points = static_cast<int>(integer(cfg, "phi_points", 16));
    proto.shots_per_atom = static_cast<int>(integer(cfg, "shots_per_atom", 50));
    proto.kappa_min = num(cfg, "kappa_min", 0.0);
    proto.kappa_max = num(cfg, "kappa_max", 0.3);
    proto.kappa_grid_points =
        static_cast<int>(integer(cfg, "kappa_grid_points", 96));
    const double kappa_true = num(cfg, "kappa_true", 0.1);
    const int trials = static_cast<int>(integer(cfg, "trials", 500));
    const std::uint64_t seed = seed_of(cfg);
    std::vector<int> n_list = {1, 4, 16, 64, 256};
    if (cfg.contains("n_list")) {
      n_list = cfg.at("n_list").get<std::vector<int>>();
    }
    if (proto.shots_per_atom < 0) {
      throw ConfigError("shots_per_atom must be >= 0");
    }

    const SqlScanResult res = sql_scan(proto, kappa_true, n_list, trials, seed);

    std::string csv = "N,sigma_kappa,trials,seed\n";
    char buf[64];
    for (const SqlPoint& p : res.points) {
      std::snprintf(buf, sizeof(buf), "%d,%.17g,%d,%llu\n", p.n_atoms, p.sigma,
                    trials, static_cast<unsigned long long>(seed));
      csv += buf;
    }
    const std::string prefix = cfg.at("out").get<std::string>();
    write_text_file(prefix + ".csv", csv);

    json fit;
    fit["command"] = "sql-scan";
    fit["slope"] = res.slope;
    fit["intercept"] = res.intercept;
    fit["slope_stderr"] = res.slope_stderr;
    fit["trials"] = res.trials;
    fit["seed"] = res.seed;
    fit["kappa_true_rad_s"] = kappa_true;
    json points = json::array();
    for (const SqlPoint& p : res.points) {
      points.push_back(json{{"n_atoms", p.n_atoms}, {"sigma_kappa", p.sigma}});
    }
    fit["points"] = points;
    fit["protocol"] = {{"j", proto.j.value()},
                       {"m1", proto.m1},
                       {"m2", proto.m2},
                       {"t_s", proto.t_s},
                       {"phi_points", proto.phi_points},
                       {"shots_per_atom", proto.shots_per_atom},
                       {"kappa_min", proto.kappa_min},
                       {"kappa_max", proto.kappa_max},
                       {"kappa_grid_points", proto.kappa_grid_points}};
    fit["constants"] = constants_block();
    write_text_file(prefix + "_fit.json", fit.dump(2) + "\n");

    out << "wrote " << prefix << ".csv and " << prefix << "_fit.json\n";
    return 0;
  } catch (const std::exception& e) {
    return fail(err, "sql-scan", e.what());
  }
}

int run_constrain_eep(const json& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg, "constrain-eep",
                    {{"c02", Kind::Number},
                     {"freq_factor_hz", Kind::Number},
                     {"delta_m_sq", Kind::Number},
                     {"n", Kind::Integer},
                     {"omega0", Kind::Number},
                     {"omega_unit", Kind::String},
                     {"mass_kg", Kind::Number},
                     {"mu_nuclear_magnetons", Kind::Number},
                     {"b_field_t", Kind::Number},
                     {"window_lo_J", Kind::Number},
                     {"window_hi_J", Kind::Number},
                     {"classifier_tol_J", Kind::Number},
                     {"out", Kind::String}});
    LvParams lv;
    lv.c02 = num(cfg, "c02", 1e-23);
    lv.freq_factor_hz = num(cfg, "freq_factor_hz", 3.9e16);

    const std::string omega_unit = str(cfg, "omega_unit", "rad_s");
    double omega0 = num(cfg, "omega0", 1e4);
    if (omega_unit == "hz") {
      omega0 *= 2.0 * constants::kPi;
    } else if (omega_unit != "rad_s") {
      throw ConfigError("omega_unit must be 'rad_s' or 'hz'");
    }

    eep::TrapParams trap;
    trap.mass_kg = num(cfg, "mass_kg", constants::kMassYb171);
    trap.omega0_rad_s = omega0;
    trap.n_level = static_cast<int>(integer(cfg, "n", 2));
    trap.mu_J_per_T =
        num(cfg, "mu_nuclear_magnetons", 0.429) * constants::kNuclearMagneton;
    trap.b_field_T = num(cfg, "b_field_t", 1.0);

    const double delta_m_sq = num(cfg, "delta_m_sq", 12.0);
    const double window_lo = num(cfg, "window_lo_J", 1e-19);
    const double window_hi = num(cfg, "window_hi_J", 1e-18);
    const double tol = num(cfg, "classifier_tol_J", 1e-30);

    const eep::ConstraintResult res = eep::constrain_a_prime(lv, trap);
    const double kappa =
        lv.c02 == 0.0 ? 0.0 : kappa_from_c02(lv, delta_m_sq);
    // The lower-diagonal entry feeds through the identical pipeline.
    const double c_prime = res.a_prime_J;
    const eep::ViolationMatrix xi{res.a_prime_J, cplx{0.0, 0.0}, c_prime};
    const eep::ViolationClass cls = eep::classify_violation(xi, tol);

    json report;
    report["command"] = "constrain-eep";
    report["inputs"] = {{"c02", lv.c02},
                        {"freq_factor_hz", lv.freq_factor_hz},
                        {"delta_m_sq", delta_m_sq},
                        {"n", trap.n_level},
                        {"omega0_rad_s", trap.omega0_rad_s},
                        {"mass_kg", trap.mass_kg},
                        {"mu_J_per_T", trap.mu_J_per_T},
                        {"b_field_T", trap.b_field_T}};
    report["delta_e_J"] = res.delta_e_J;
    report["delta_e_order_of_magnitude_J"] = order_of_magnitude(res.delta_e_J);
    report["kappa_rad_s"] = kappa;
    report["a_prime_J"] = res.a_prime_J;
    report["c_prime_J"] = c_prime;
    report["a_prime_order_of_magnitude_J"] = order_of_magnitude(res.a_prime_J);
    report["paper_window_J"] = {window_lo, window_hi};
    report["in_paper_window"] = order_in_window(res.a_prime_J, window_lo, window_hi);
    report["violation_class"] = eep::to_string(cls);
    report["formula"] = {
        "delta_E = h * C02 * freq_factor",
        "kappa = 2 * pi * C02 * freq_factor / delta_m_sq",
        "a_prime = delta_E * mass * c^2 / (hbar * omega0 * (2 * n + 1))",
    };
    report["units"] = {
        "delta_E [J] = [J s] * [1] * [Hz]",
        "kappa [rad/s] = [1] * [Hz] / [1]",
        "a_prime [J] = [J] * [kg] * [m^2 s^-2] / ([J s] * [rad/s] * [1])",
    };
    report["constants"] = constants_block();

    const std::string body = report.dump(2) + "\n";
    if (cfg.contains("out")) {
      write_text_file(cfg.at("out").get<std::string>(), body);
    }
    out << body;
    return 0;
  } catch (const std::exception& e) {
    return fail(err, "constrain-eep", e.what());
  }
}

int run_locality_demo(const json& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg, "locality-demo",
                    {{"j", Kind::Number},
                     {"state", Kind::String},
                     {"kappa", Kind::Number},
                     {"t", Kind::Number},
                     {"seed", Kind::Integer},
                     {"out", Kind::String}});
    const SpinQuantumNumber j(num(cfg, "j", 0.5));
    const double kappa = num(cfg, "kappa", 1.0);
    const double t = num(cfg, "t", constants::kPi / 4.0);
    const std::uint64_t seed = seed_of(cfg);
    const std::string state_kind = str(cfg, "state", "plus-product");

    const std::size_t d = j.dimension();
    BipartiteState state;
    state.d1 = d;
    state.d2 = d;
    state.amplitudes.assign(d * d, cplx{0.0, 0.0});
    if (state_kind == "bell") {
      // (|+j,+j> + |-j,-j>)/sqrt(2)
      state.amplitudes[0] = cplx{1.0 / std::sqrt(2.0), 0.0};
      state.amplitudes[(d - 1) * d + (d - 1)] = cplx{1.0 / std::sqrt(2.0), 0.0};
    } else if (state_kind == "plus-product") {
      // ((|+j> + |-j>)/sqrt(2)) on both atoms
      const double amp = 0.5;
      state.amplitudes[0] = cplx{amp, 0.0};
      state.amplitudes[d - 1] = cplx{amp, 0.0};
      state.amplitudes[(d - 1) * d] = cplx{amp, 0.0};
      state.amplitudes[(d - 1) * d + (d - 1)] = cplx{amp, 0.0};
    } else if (state_kind == "random") {
      auto gen = rng::engine(seed, {0x10CA1});
      for (cplx& a : state.amplitudes) {
        // Box-Muller from the deterministic uniform stream
        const double u1 = rng::uniform01(gen);
        const double u2 = rng::uniform01(gen);
        const double r = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300)));
        a = cplx{r * std::cos(2.0 * constants::kPi * u2),
                 r * std::sin(2.0 * constants::kPi * u2)};
      }
      normalize(state.amplitudes);
    } else {
      throw ConfigError("state must be 'bell', 'plus-product' or 'random'");
    }

    const LocalityResult res = locality_check(state, j, kappa, t);

    json report;
    report["command"] = "locality-demo";
    report["j"] = j.value();
    report["state"] = state_kind;
    report["kappa_rad_s"] = kappa;
    report["t_s"] = t;
    report["seed"] = seed;
    report["s_before_nats"] = res.s_before;
    report["s_after_local_nats"] = res.s_after_local;
    report["s_after_nonlocal_nats"] = res.s_after_nonlocal;
    report["delta_s_local_nats"] = res.s_after_local - res.s_before;
    report["delta_s_nonlocal_nats"] = res.s_after_nonlocal - res.s_before;
    report["constants"] = constants_block();

    const std::string body = report.dump(2) + "\n";
    if (cfg.contains("out")) {
      write_text_file(cfg.at("out").get<std::string>(), body);
    }
    out << body;
    return 0;
  } catch (const std::exception& e) {
    return fail(err, "locality-demo", e.what());
  }
}

} // namespace spinlv::cli
