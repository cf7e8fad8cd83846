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

#include "spinlv/pulses.hpp"

#include <cmath>
#include <stdexcept>

#include "spinlv/constants.hpp"

namespace spinlv {
namespace {

constexpr double kHalfPi = constants::kPi / 2.0;

void apply_free_in_place(const SpinOperators& ops, double phi, double kappa_t,
                         CVector& state) {
  for (std::size_t k = 0; k < state.size(); ++k) {
    const double m = ops.j.m_value(k);
    const double angle = phi * m - kappa_t * m * m;
    state[k] *= cplx{std::cos(angle), std::sin(angle)};
  }
}

} // namespace

void validate(const PulseSequence& seq) {
  if (seq.elements.empty()) {
    throw std::invalid_argument("pulse sequence must not be empty");
  }
  for (const PulseElement& el : seq.elements) {
    if (const auto* free = std::get_if<FreeEvolution>(&el)) {
      if (!(free->duration_s >= 0.0)) {
        throw std::invalid_argument("free evolution duration must be >= 0");
      }
    } else if (const auto* rot = std::get_if<Rotation>(&el)) {
      if (!std::isfinite(rot->angle_rad)) {
        throw std::invalid_argument("rotation angle must be finite");
      }
    }
  }
}

PulseSequence ramsey_sequence(double duration_s, double phi_rate_rad_s,
                              double kappa_rad_s) {
  PulseSequence seq;
  seq.label = "ramsey";
  seq.elements = {
      Rotation{Axis::X, -kHalfPi},
      FreeEvolution{duration_s, phi_rate_rad_s, kappa_rad_s, true},
      Rotation{Axis::X, kHalfPi},
  };
  return seq;
}

PulseSequence free_precession_sequence(double duration_s, double kappa_rad_s) {
  PulseSequence seq;
  seq.label = "free-precession";
  seq.elements = {FreeEvolution{duration_s, 0.0, kappa_rad_s, true}};
  return seq;
}

PulseSequence spin_echo_sequence(double tau_s, double phi_rate_rad_s,
                                 double kappa_rad_s) {
  PulseSequence seq;
  seq.label = "spin-echo";
  seq.elements = {
      Rotation{Axis::X, -kHalfPi},
      FreeEvolution{tau_s, phi_rate_rad_s, kappa_rad_s},
      Rotation{Axis::Y, constants::kPi},
      FreeEvolution{tau_s, phi_rate_rad_s, kappa_rad_s},
      Rotation{Axis::X, kHalfPi},
  };
  return seq;
}

PulseSequence cpmg_sequence(int n_pi_pulses, double tau_s, double phi_rate_rad_s,
                            double kappa_rad_s) {
  if (n_pi_pulses < 1) {
    throw std::invalid_argument("CPMG needs at least one pi pulse");
  }
  PulseSequence seq;
  seq.label = "cpmg-" + std::to_string(n_pi_pulses);
  seq.elements.emplace_back(Rotation{Axis::X, -kHalfPi});
  seq.elements.emplace_back(FreeEvolution{tau_s, phi_rate_rad_s, kappa_rad_s});
  for (int k = 1; k < n_pi_pulses; ++k) {
    seq.elements.emplace_back(Rotation{Axis::Y, constants::kPi});
    seq.elements.emplace_back(FreeEvolution{2.0 * tau_s, phi_rate_rad_s, kappa_rad_s});
  }
  seq.elements.emplace_back(Rotation{Axis::Y, constants::kPi});
  seq.elements.emplace_back(FreeEvolution{tau_s, phi_rate_rad_s, kappa_rad_s});
  seq.elements.emplace_back(Rotation{Axis::X, kHalfPi});
  return seq;
}

CMatrix free_evolution_unitary(const SpinOperators& ops, double phi, double kappa_t) {
  const std::size_t d = ops.j.dimension();
  CMatrix u(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = ops.j.m_value(k);
    const double angle = phi * m - kappa_t * m * m;
    u(k, k) = cplx{std::cos(angle), std::sin(angle)};
  }
  return u;
}

CMatrix ramsey_unitary(const SpinOperators& ops, double phi) {
  return ramsey_lv_unitary(ops, phi, 0.0, 0.0);
}

CMatrix ramsey_lv_unitary(const SpinOperators& ops, double phi, double kappa,
                          double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("evolution time must be >= 0");
  }
  const CMatrix open = rotation(ops, Axis::X, -kHalfPi);  // exp(+i pi Jx / 2)
  const CMatrix close = rotation(ops, Axis::X, kHalfPi);  // exp(-i pi Jx / 2)
  return close * (free_evolution_unitary(ops, phi, kappa * t) * open);
}

CMatrix sequence_unitary(const SpinOperators& ops, const PulseSequence& seq) {
  validate(seq);
  CMatrix u = CMatrix::identity(ops.j.dimension());
  for (const PulseElement& el : seq.elements) {
    if (const auto* rot = std::get_if<Rotation>(&el)) {
      u = rotation(ops, rot->axis, rot->angle_rad) * u;
    } else {
      const auto& free = std::get<FreeEvolution>(el);
      u = free_evolution_unitary(ops, free.phi_rate_rad_s * free.duration_s,
                                 free.kappa_rad_s * free.duration_s) *
          u;
    }
  }
  return u;
}

CVector evolve_sequence(const SpinOperators& ops, const PulseSequence& seq,
                        const CVector& initial) {
  validate(seq);
  if (initial.size() != ops.j.dimension()) {
    throw std::invalid_argument("state dimension does not match spin operators");
  }
  CVector state = initial;
  for (const PulseElement& el : seq.elements) {
    if (const auto* rot = std::get_if<Rotation>(&el)) {
      state = rotation(ops, rot->axis, rot->angle_rad) * state;
    } else {
      const auto& free = std::get<FreeEvolution>(el);
      apply_free_in_place(ops, free.phi_rate_rad_s * free.duration_s,
                          free.kappa_rad_s * free.duration_s, state);
    }
  }
  return state;
}

double relative_lv_phase(SpinQuantumNumber j, double m1, double m2, double kappa,
                         double t) {
  j.basis_index(m1);
  j.basis_index(m2);
  return kappa * t * (m1 * m1 - m2 * m2);
}

} // namespace spinlv
