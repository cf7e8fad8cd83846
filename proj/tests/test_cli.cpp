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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spinlv/cli.hpp"
#include "spinlv/constants.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("spinlv_test_" + tag);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json run(int (*cmd)(const json&, std::ostream&, std::ostream&), const json& cfg,
         int expect_code) {
  std::ostringstream out, err;
  const int code = cmd(cfg, out, err);
  CHECK(code == expect_code);
  if (code == 0) {
    return out.str().empty() ? json{} : json::parse(out.str(), nullptr, false);
  }
  return json::parse(err.str(), nullptr, false);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("check-identities passes by default and honors overrides") {
  std::ostringstream out, err;
  const int code = spinlv::cli::run_check_identities(
      json{{"j_list", {0.5, 1.0, 1.5}}, {"phi_points", 12}}, out, err);
  CHECK(code == 0);
  const json report = json::parse(out.str());
  CHECK(report["pass"] == true);
  CHECK(report["overall_max_norm"].get<double>() <= 1e-10);
  CHECK(report["constants"]["constants_version"] == spinlv::constants::kVersion);

  // tolerance override is echoed in the report
  std::ostringstream out2, err2;
  spinlv::cli::run_check_identities(
      json{{"j_list", {0.5}}, {"phi_points", 8}, {"tolerance", 1e-3}}, out2, err2);
  CHECK(json::parse(out2.str())["tolerance"].get<double>() == 1e-3);

  // empty j list is a usage error
  const json e = run(spinlv::cli::run_check_identities, json{{"j_list", json::array()}}, 1);
  CHECK(e.contains("error"));

  // unknown keys are rejected
  run(spinlv::cli::run_check_identities, json{{"jlist", {0.5}}}, 1);

  // an unreachable tolerance fails the numerical gate with exit code 2 and
  // a machine-readable error object on stderr
  std::ostringstream out3, err3;
  const int strict = spinlv::cli::run_check_identities(
      json{{"j_list", {2.5}}, {"phi_points", 8}, {"tolerance", 1e-18}}, out3, err3);
  CHECK(strict == 2);
  const json gate = json::parse(err3.str());
  CHECK(gate["error"]["tolerance"] == 1e-18);
  CHECK(gate["error"]["overall_max_norm"].get<double>() > 1e-18);
}

TEST_CASE("simulate-ramsey writes deterministic artifacts") {
  const fs::path dir = temp_dir("sim");
  const std::string prefix = (dir / "fringe").string();

  const json cfg{{"j", 0.5}, {"phi_points", 16}, {"shots", 200},
                 {"seed", 77}, {"out", prefix}};
  run(spinlv::cli::run_simulate_ramsey, cfg, 0);
  const std::string csv1 = slurp(prefix + ".csv");
  const std::string json1 = slurp(prefix + ".json");

  run(spinlv::cli::run_simulate_ramsey, cfg, 0);
  CHECK(slurp(prefix + ".csv") == csv1);
  CHECK(slurp(prefix + ".json") == json1);

  CHECK(csv1.rfind("phi_rad,outcome_index,probability,count\n", 0) == 0);

  // exact fringe follows cos^2(phi/2) for the spin-1/2 interferometer
  const json doc = json::parse(json1);
  const auto phi = doc["phi_rad"].get<std::vector<double>>();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double expected = std::cos(phi[i] / 2) * std::cos(phi[i] / 2);
    CHECK(doc["probabilities"][i][0].get<double>() ==
          doctest::Approx(expected).epsilon(1e-10));
  }
  CHECK(doc["meta"]["seed"] == 77);
  CHECK(doc["constants"]["constants_version"] == spinlv::constants::kVersion);

  // shots = 0 drops the count column
  const std::string prefix0 = (dir / "exact").string();
  run(spinlv::cli::run_simulate_ramsey,
      json{{"j", 0.5}, {"phi_points", 8}, {"shots", 0}, {"out", prefix0}}, 0);
  CHECK(slurp(prefix0 + ".csv").rfind("phi_rad,outcome_index,probability\n", 0) == 0);

  // unwritable output path
  run(spinlv::cli::run_simulate_ramsey,
      json{{"j", 0.5}, {"out", "/nonexistent-dir/x"}}, 1);
  // missing out
  run(spinlv::cli::run_simulate_ramsey, json{{"j", 0.5}}, 1);
  // invalid spin
  run(spinlv::cli::run_simulate_ramsey, json{{"j", 0.3}, {"out", prefix}}, 1);
  // pair initial needs projections
  run(spinlv::cli::run_simulate_ramsey,
      json{{"j", 3.5}, {"initial", "pair"}, {"out", prefix}}, 1);
}

TEST_CASE("sql-scan command") {
  const fs::path dir = temp_dir("sql");
  const std::string prefix = (dir / "scan").string();
  const json cfg{{"n_list", {1, 2, 4, 8}}, {"trials", 8},   {"shots_per_atom", 10},
                 {"phi_points", 8},        {"kappa_grid_points", 32},
                 {"seed", 5},              {"out", prefix}};
  run(spinlv::cli::run_sql_scan, cfg, 0);

  const std::string csv = slurp(prefix + ".csv");
  CHECK(csv.rfind("N,sigma_kappa,trials,seed\n", 0) == 0);
  CHECK(csv.find("\n1,") != std::string::npos);

  const json fit = json::parse(slurp(prefix + "_fit.json"));
  CHECK(fit["seed"] == 5);
  CHECK(fit["trials"] == 8);
  CHECK(fit["points"].size() == 4);
  CHECK(fit["slope"].get<double>() < 0.0);

  // reruns are byte-identical
  const std::string fit1 = slurp(prefix + "_fit.json");
  run(spinlv::cli::run_sql_scan, cfg, 0);
  CHECK(slurp(prefix + "_fit.json") == fit1);

  // single trial is rejected
  json bad = cfg;
  bad["trials"] = 1;
  run(spinlv::cli::run_sql_scan, bad, 1);

  // fewer than 4 distinct ensemble sizes rejected
  json few = cfg;
  few["n_list"] = {1, 2, 2};
  run(spinlv::cli::run_sql_scan, few, 1);
}

TEST_CASE("constrain-eep command") {
  const json defaults = json::object();
  std::ostringstream out, err;
  CHECK(spinlv::cli::run_constrain_eep(defaults, out, err) == 0);
  const json report = json::parse(out.str());

  CHECK(report["a_prime_J"].get<double>() == doctest::Approx(1.25e-18).epsilon(1e-2));
  CHECK(report["c_prime_J"] == report["a_prime_J"]);
  CHECK(report["delta_e_J"].get<double>() == doctest::Approx(2.584e-40).epsilon(1e-2));
  CHECK(report["kappa_rad_s"].get<double>() == doctest::Approx(2.042e-7).epsilon(1e-2));
  CHECK(report["in_paper_window"] == true);
  CHECK(report["violation_class"] == "classical");

  // golden formula/unit-trace strings
  CHECK(report["formula"][0] == "delta_E = h * C02 * freq_factor");
  CHECK(report["formula"][2] ==
        "a_prime = delta_E * mass * c^2 / (hbar * omega0 * (2 * n + 1))");
  CHECK(report["units"][0] == "delta_E [J] = [J s] * [1] * [Hz]");

  // zero coefficient gives zero everywhere and no violation
  std::ostringstream out0, err0;
  spinlv::cli::run_constrain_eep(json{{"c02", 0.0}}, out0, err0);
  const json zero = json::parse(out0.str());
  CHECK(zero["a_prime_J"] == 0.0);
  CHECK(zero["kappa_rad_s"] == 0.0);
  CHECK(zero["in_paper_window"] == false);
  CHECK(zero["violation_class"] == "none");

  // delta_m_sq affects kappa only, never a'
  std::ostringstream out1, err1;
  spinlv::cli::run_constrain_eep(json{{"delta_m_sq", 48.0}}, out1, err1);
  const json quarter = json::parse(out1.str());
  CHECK(quarter["a_prime_J"] == report["a_prime_J"]);
  CHECK(quarter["kappa_rad_s"].get<double>() ==
        doctest::Approx(report["kappa_rad_s"].get<double>() / 4.0).epsilon(1e-12));

  // omega unit switch rescales by 2 pi
  std::ostringstream out2, err2;
  spinlv::cli::run_constrain_eep(json{{"omega_unit", "hz"}}, out2, err2);
  const json hz = json::parse(out2.str());
  CHECK(hz["a_prime_J"].get<double>() ==
        doctest::Approx(report["a_prime_J"].get<double>() / (2 * spinlv::constants::kPi))
            .epsilon(1e-12));

  run(spinlv::cli::run_constrain_eep, json{{"omega_unit", "thz"}}, 1);
  run(spinlv::cli::run_constrain_eep, json{{"mass_kg", -1.0}}, 1);
}

TEST_CASE("locality-demo command") {
  // local evolution leaves a Bell pair's entropy alone
  std::ostringstream out, err;
  CHECK(spinlv::cli::run_locality_demo(
            json{{"state", "bell"}, {"kappa", 1.0}, {"t", 0.785}}, out, err) == 0);
  const json bell = json::parse(out.str());
  CHECK(std::abs(bell["delta_s_local_nats"].get<double>()) <= 1e-12);
  CHECK(bell["s_before_nats"].get<double>() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));

  // the nonlocal control entangles the product superposition
  std::ostringstream out1, err1;
  spinlv::cli::run_locality_demo(
      json{{"state", "plus-product"}, {"kappa", 1.0}, {"t", spinlv::constants::kPi / 4}},
      out1, err1);
  const json plus = json::parse(out1.str());
  CHECK(plus["delta_s_nonlocal_nats"].get<double>() > 0.01);
  CHECK(std::abs(plus["delta_s_local_nats"].get<double>()) <= 1e-12);

  // kappa t = 0 changes nothing
  std::ostringstream out2, err2;
  spinlv::cli::run_locality_demo(json{{"state", "random"}, {"kappa", 3.0}, {"t", 0.0}},
                                 out2, err2);
  const json idle = json::parse(out2.str());
  CHECK(idle["s_before_nats"] == idle["s_after_local_nats"]);
  CHECK(idle["s_before_nats"] == idle["s_after_nonlocal_nats"]);

  // odd state specification
  run(spinlv::cli::run_locality_demo, json{{"state", "ghz-but-wrong"}}, 1);
}

} // TEST_SUITE
