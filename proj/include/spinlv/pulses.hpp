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

#include <string>
#include <variant>
#include <vector>

#include "spinlv/cmatrix.hpp"
#include "spinlv/spin_ops.hpp"

// Pulse-sequence engine. A sequence is an ordered list of rotations and
// free-evolution segments; evolution left-multiplies the corresponding
// unitaries in element order.
//
// Sign conventions, used consistently everywhere:
//   Rotation(axis, angle)        -> exp(-i angle J_axis)
//   FreeEvolution(t, phi_rate, kappa) -> exp(+i (phi_rate t) Jz - i (kappa t) Jz^2)
// so the interferometer composition exp(-i pi Jx/2) exp(i phi Jz) exp(i pi Jx/2)
// is the sequence [Rotation(x, -pi/2), FreeEvolution(phi), Rotation(x, +pi/2)].

namespace spinlv {

struct Rotation {
  Axis axis;
  double angle_rad;
};

struct FreeEvolution {
  double duration_s = 0.0;
  double phi_rate_rad_s = 0.0; // Larmor/detuning accumulation rate
  double kappa_rad_s = 0.0;
  // Fringe generation substitutes the scanned phi for phi_rate * duration
  // on segments with this flag; plain evolution ignores it.
  bool scan_phi = false;
};

using PulseElement = std::variant<Rotation, FreeEvolution>;

struct PulseSequence {
  std::vector<PulseElement> elements;
  std::string label;
};

// Throws std::invalid_argument on empty sequences or negative durations.
void validate(const PulseSequence& seq);

// Presets. phi_rate and kappa apply to every free segment.
PulseSequence ramsey_sequence(double duration_s, double phi_rate_rad_s, double kappa_rad_s);
PulseSequence free_precession_sequence(double duration_s, double kappa_rad_s);
PulseSequence spin_echo_sequence(double tau_s, double phi_rate_rad_s, double kappa_rad_s);
PulseSequence cpmg_sequence(int n_pi_pulses, double tau_s, double phi_rate_rad_s,
                            double kappa_rad_s);

// exp(i phi Jz - i kappa_t Jz^2), diagonal.
CMatrix free_evolution_unitary(const SpinOperators& ops, double phi, double kappa_t);

// exp(-i pi Jx/2) exp(i phi Jz) exp(i pi Jx/2)  (= exp(-i phi Jy))
CMatrix ramsey_unitary(const SpinOperators& ops, double phi);

// exp(-i pi Jx/2) exp(i phi Jz - i kappa t Jz^2) exp(i pi Jx/2)
// (= exp(-i phi Jy - i kappa t Jy^2))
CMatrix ramsey_lv_unitary(const SpinOperators& ops, double phi, double kappa, double t);

// Product of all element unitaries (rightmost acts first).
CMatrix sequence_unitary(const SpinOperators& ops, const PulseSequence& seq);

// Applies the sequence to a state; throws on dimension mismatch.
CVector evolve_sequence(const SpinOperators& ops, const PulseSequence& seq,
                        const CVector& initial);

// Phase accumulated between |J,m1> and |J,m2> under kappa Jz^2 for time t:
// kappa t (m1^2 - m2^2).
double relative_lv_phase(SpinQuantumNumber j, double m1, double m2, double kappa,
                         double t);

} // namespace spinlv
