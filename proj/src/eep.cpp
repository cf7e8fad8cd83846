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

#include "spinlv/eep.hpp"

#include <cmath>
#include <stdexcept>

#include "spinlv/constants.hpp"

namespace spinlv::eep {

CMatrix ViolationMatrix::to_matrix() const {
  CMatrix xi(2);
  xi(0, 0) = cplx{a_prime_J, 0.0};
  xi(0, 1) = b_prime_J;
  xi(1, 0) = std::conj(b_prime_J);
  xi(1, 1) = cplx{c_prime_J, 0.0};
  return xi;
}

void validate(const TrapParams& trap) {
  if (!(trap.mass_kg > 0.0)) {
    throw std::invalid_argument("trap mass must be positive");
  }
  if (!(trap.omega0_rad_s > 0.0)) {
    throw std::invalid_argument("trap frequency must be positive");
  }
  if (trap.n_level < 0) {
    throw std::invalid_argument("oscillator level must be >= 0");
  }
}

const char* to_string(ViolationClass c) {
  switch (c) {
    case ViolationClass::None: return "none";
    case ViolationClass::Classical: return "classical";
    case ViolationClass::Quantum: return "quantum";
  }
  return "unknown";
}

CMatrix h_lli_block(const TrapParams& trap, const ViolationMatrix& xi, double p) {
  validate(trap);
  const double kinetic = p * p / (2.0 * trap.mass_kg);
  const double zeeman = 0.5 * trap.mu_J_per_T * trap.b_field_T;
  const double c = constants::kSpeedOfLight;
  const double coupling = p * p / (2.0 * trap.mass_kg * trap.mass_kg * c * c);

  CMatrix h(2);
  h(0, 0) = cplx{kinetic + zeeman + coupling * xi.a_prime_J, 0.0};
  h(0, 1) = coupling * xi.b_prime_J;
  h(1, 0) = coupling * std::conj(xi.b_prime_J);
  h(1, 1) = cplx{kinetic - zeeman + coupling * xi.c_prime_J, 0.0};
  return h;
}

std::vector<CMatrix> build_h_lli(const TrapParams& trap, const ViolationMatrix& xi,
                                 const std::vector<double>& p_grid) {
  std::vector<CMatrix> blocks;
  blocks.reserve(p_grid.size());
  for (double p : p_grid) {
    blocks.push_back(h_lli_block(trap, xi, p));
  }
  return blocks;
}

double p2_expectation(int n, double mass_kg, double omega0_rad_s) {
  if (n < 0) {
    throw std::invalid_argument("oscillator level must be >= 0");
  }
  if (!(mass_kg > 0.0) || !(omega0_rad_s > 0.0)) {
    throw std::invalid_argument("mass and frequency must be positive");
  }
  return mass_kg * constants::kHbar * omega0_rad_s * (2.0 * n + 1.0) / 2.0;
}

double energy_shift_lli(const TrapParams& trap, double a_prime_J) {
  validate(trap);
  const double c = constants::kSpeedOfLight;
  return constants::kHbar * trap.omega0_rad_s * (2.0 * trap.n_level + 1.0) /
         (trap.mass_kg * c * c) * a_prime_J;
}

ViolationClass classify_violation(const ViolationMatrix& xi, double tol_J) {
  if (!(tol_J > 0.0)) {
    throw std::invalid_argument("classifier tolerance must be positive");
  }
  if (std::abs(xi.b_prime_J) > tol_J) {
    return ViolationClass::Quantum;
  }
  if (std::max(std::abs(xi.a_prime_J), std::abs(xi.c_prime_J)) > tol_J) {
    return ViolationClass::Classical;
  }
  return ViolationClass::None;
}

double transition_probability(const TrapParams& trap, const ViolationMatrix& xi,
                              SpinState initial, double p, double t) {
  CMatrix h = h_lli_block(trap, xi, p);
  // The common-mode energy (kinetic term) is a global phase; removing it
  // keeps the accumulated phase of order the level splitting, not p^2/2m.
  const double mean = 0.5 * (h(0, 0).real() + h(1, 1).real());
  h(0, 0) -= mean;
  h(1, 1) -= mean;
  // exp(-i H t / hbar): H in joules, so divide by hbar once.
  const CMatrix u = expm_hermitian(cplx{1.0 / constants::kHbar, 0.0} * h, t);
  const std::size_t from = initial == SpinState::Up ? 0 : 1;
  const std::size_t to = 1 - from;
  const cplx amp = u(to, from);
  return amp.real() * amp.real() + amp.imag() * amp.imag();
}

ConstraintResult constrain_a_prime(const LvParams& lv, const TrapParams& trap) {
  validate(trap);
  ConstraintResult res;
  res.delta_e_J = lv_energy_shift(lv);
  const double c = constants::kSpeedOfLight;
  res.a_prime_J = res.delta_e_J * trap.mass_kg * c * c /
                  (constants::kHbar * trap.omega0_rad_s * (2.0 * trap.n_level + 1.0));
  return res;
}

ViolationMatrix lv_xi_spin_half(double kappa_rad_s) {
  const double shift = constants::kHbar * kappa_rad_s / 4.0;
  return ViolationMatrix{shift, cplx{0.0, 0.0}, shift};
}

} // namespace spinlv::eep
