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

#include "spinlv/lv_model.hpp"

#include <cmath>
#include <stdexcept>

#include "spinlv/constants.hpp"

namespace spinlv {
namespace {

// <p_i^2> for one axis of a minimum-uncertainty Gaussian.
double momentum_second_moment(double sigma_m) {
  if (std::isinf(sigma_m)) {
    return 0.0;
  }
  if (!(sigma_m > 0.0)) {
    throw std::invalid_argument("wavepacket spreads must be positive");
  }
  const double h = constants::kHbar;
  return h * h / (4.0 * sigma_m * sigma_m);
}

} // namespace

double t20_diagonal(SpinQuantumNumber j, double m, double reduced) {
  const double jv = j.value();
  if (j.twice() == 1) {
    throw std::invalid_argument("rank-2 tensor vanishes for J = 1/2");
  }
  j.basis_index(m); // validates |m| <= J and J - m integer
  const double numer = -jv * (jv + 1.0) + 3.0 * m * m;
  const double denom = std::sqrt((2.0 * jv + 3.0) * (jv + 1.0) * (2.0 * jv + 1.0) *
                                 jv * (2.0 * jv - 1.0));
  return reduced * numer / denom;
}

double delta_h_expectation(const GaussianWavepacket& wp, double c02) {
  if (!(wp.mass_kg > 0.0)) {
    throw std::invalid_argument("wavepacket mass must be positive");
  }
  const double px2 = momentum_second_moment(wp.sigma_x_m);
  const double py2 = momentum_second_moment(wp.sigma_y_m);
  const double pz2 = momentum_second_moment(wp.sigma_z_m);
  const double p2 = px2 + py2 + pz2;
  return -c02 / (6.0 * wp.mass_kg) * (p2 - 3.0 * pz2);
}

CMatrix effective_lv_hamiltonian(const SpinOperators& ops, double kappa) {
  const std::size_t d = ops.j.dimension();
  CMatrix h(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = ops.j.m_value(k);
    h(k, k) = cplx{kappa * m * m, 0.0};
  }
  return h;
}

double lv_energy_shift(const LvParams& lv) {
  if (!(lv.freq_factor_hz > 0.0)) {
    throw std::invalid_argument("freq_factor must be positive");
  }
  return constants::kPlanck * lv.c02 * lv.freq_factor_hz;
}

double kappa_from_c02(const LvParams& lv, double delta_m_sq) {
  if (delta_m_sq == 0.0) {
    throw std::invalid_argument("delta_m_sq must be nonzero");
  }
  if (!(lv.freq_factor_hz > 0.0)) {
    throw std::invalid_argument("freq_factor must be positive");
  }
  return 2.0 * constants::kPi * lv.c02 * lv.freq_factor_hz / delta_m_sq;
}

} // namespace spinlv
