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

#include <vector>

#include "spinlv/cmatrix.hpp"
#include "spinlv/lv_model.hpp"

// Equivalence-principle test framework for a harmonically trapped spin-1/2
// atom: the 2x2 violation matrix, the momentum-dependent test Hamiltonian,
// perturbative level shifts, the classical-vs-quantum violation classifier
// and the constraint pipeline mapping measured LV energy shifts onto the
// violation parameter a'.

namespace spinlv::eep {

// xi = [[a', b'], [conj(b'), c']], entries in joules. Diagonal-only xi
// shifts levels; a nonzero b' drives spin flips.
struct ViolationMatrix {
  double a_prime_J = 0.0;
  cplx b_prime_J{0.0, 0.0};
  double c_prime_J = 0.0;

  CMatrix to_matrix() const;
};

struct TrapParams {
  double mass_kg;
  double omega0_rad_s;
  int n_level;        // oscillator level
  double mu_J_per_T;  // atomic magnetic moment
  double b_field_T;
};

void validate(const TrapParams& trap);

enum class ViolationClass { None, Classical, Quantum };
const char* to_string(ViolationClass c);

// 2x2 block at momentum p:
//   p^2/(2m) I + mu B diag(1/2, -1/2) + p^2/(2 m^2 c^2) xi   [joules]
CMatrix h_lli_block(const TrapParams& trap, const ViolationMatrix& xi, double p);
std::vector<CMatrix> build_h_lli(const TrapParams& trap, const ViolationMatrix& xi,
                                 const std::vector<double>& p_grid);

// <n|P^2|n> = m hbar omega0 (2n+1)/2 for the harmonic level n.
double p2_expectation(int n, double mass_kg, double omega0_rad_s);

// Level shift hbar omega0 (2n+1) / (m c^2) * a'.
double energy_shift_lli(const TrapParams& trap, double a_prime_J);

// Quantum if |b'| > tol, else Classical if a' or c' exceeds tol, else None.
ViolationClass classify_violation(const ViolationMatrix& xi, double tol_J);

enum class SpinState { Up, Down };

// |<other spin| exp(-i H t / hbar) |initial>|^2 for the block at momentum p.
double transition_probability(const TrapParams& trap, const ViolationMatrix& xi,
                              SpinState initial, double p, double t);

struct ConstraintResult {
  double delta_e_J = 0.0;  // h C02 freq_factor
  double a_prime_J = 0.0;  // delta_e * m c^2 / (hbar omega0 (2n+1))
};

// Inverts the level-shift formula to bound a' from the measured LV shift.
ConstraintResult constrain_a_prime(const LvParams& lv, const TrapParams& trap);

// xi equivalent of the kappa Jz^2 term in the spin-1/2 representation:
// diagonal hbar kappa / 4, no off-diagonal part.
ViolationMatrix lv_xi_spin_half(double kappa_rad_s);

} // namespace spinlv::eep
