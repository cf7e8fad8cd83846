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

#include "spinlv/cmatrix.hpp"
#include "spinlv/spin_ops.hpp"

// Anisotropy operator content: rank-2 tensor matrix elements, the momentum
// quadrupole expectation value, and the effective kappa Jz^2 Hamiltonian
// with its mapping from the dimensionless coefficient C02.

namespace spinlv {

struct LvParams {
  double c02 = 0.0;                // dimensionless anisotropy coefficient
  double freq_factor_hz = 3.9e16;  // sensitivity factor, Hz
  double kappa_rad_s = 0.0;        // effective coupling, rad/s
};

// Minimum-uncertainty Gaussian test state; <p_i^2> = hbar^2 / (4 sigma_i^2).
// A spread of +infinity is allowed and means a momentum-free direction.
struct GaussianWavepacket {
  double sigma_x_m;
  double sigma_y_m;
  double sigma_z_m;
  double mass_kg;
};

// Diagonal matrix element <J,m|T0^(2)|J,m> / <J||T^(2)||J> * reduced:
//   reduced * (-J(J+1) + 3m^2) / sqrt((2J+3)(J+1)(2J+1)J(2J-1)).
// Throws for J = 1/2, where the rank-2 tensor vanishes identically and the
// normalization factor (2J-1) is zero.
double t20_diagonal(SpinQuantumNumber j, double m, double reduced);

// <delta H> = -C02/(6 m) (<p^2> - 3 <p_z^2>) for the Gaussian wavepacket,
// in joules. Throws on non-positive spreads or mass.
double delta_h_expectation(const GaussianWavepacket& wp, double c02);

// kappa Jz^2, entries kappa m^2 (units of kappa, hbar = 1).
CMatrix effective_lv_hamiltonian(const SpinOperators& ops, double kappa);

// Energy shift h * C02 * freq_factor, joules.
double lv_energy_shift(const LvParams& lv);

// kappa such that hbar kappa delta_m_sq equals the energy shift:
//   kappa = 2 pi C02 freq_factor / delta_m_sq  [rad/s].
double kappa_from_c02(const LvParams& lv, double delta_m_sq);

} // namespace spinlv
