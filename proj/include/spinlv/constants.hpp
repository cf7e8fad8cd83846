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

// Pinned physical constants (SI). Every JSON report echoes this table so
// results stay traceable to the constants they were computed with.

namespace spinlv::constants {

inline constexpr const char* kVersion = "spinlv-constants-1";

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHbar = 1.054571817e-34;             // J s
inline constexpr double kPlanck = 6.62607015e-34;            // J s
inline constexpr double kSpeedOfLight = 2.99792458e8;        // m / s
inline constexpr double kNuclearMagneton = 5.0507837461e-27; // J / T
inline constexpr double kElectronMass = 9.1093837015e-31;    // kg
inline constexpr double kMassYb171 = 2.838e-25;              // kg

} // namespace spinlv::constants
