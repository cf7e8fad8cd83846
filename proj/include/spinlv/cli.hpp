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

#pragma once

#include <iosfwd>

#include <json.hpp>

// Command implementations behind the spinlv binary. Each command takes an
// already merged configuration (defaults <- config file <- flags), writes
// its artifacts, and returns a process exit code:
//   0 success, 1 validation failure, 2 numerical-check failure.
// Validation failures also emit a machine-readable JSON object on err.
// Unknown configuration keys are rejected.

namespace spinlv::cli {

int run_check_identities(const nlohmann::json& config, std::ostream& out,
                         std::ostream& err);
int run_simulate_ramsey(const nlohmann::json& config, std::ostream& out,
                        std::ostream& err);
int run_sql_scan(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int run_constrain_eep(const nlohmann::json& config, std::ostream& out,
                      std::ostream& err);
int run_locality_demo(const nlohmann::json& config, std::ostream& out,
                      std::ostream& err);

// Pinned constants table echoed into every JSON report.
nlohmann::json constants_block();

} // namespace spinlv::cli
