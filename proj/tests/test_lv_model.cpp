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
#include <limits>

#include "spinlv/constants.hpp"
#include "spinlv/lv_model.hpp"
#include "spinlv/spin_ops.hpp"

using namespace spinlv;

namespace {

// Quadrature oracle for <p^2> of a minimum-uncertainty Gaussian: the
// momentum density is ~ exp(-2 sigma^2 p^2 / hbar^2); integrate directly.
double p2_quadrature(double sigma) {
  const double hbar = constants::kHbar;
  const double p_std = hbar / (2.0 * sigma);
  const double limit = 12.0 * p_std;
  const int steps = 20000;
  const double dp = 2.0 * limit / steps;
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double p = -limit + i * dp;
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    const double rho = std::exp(-2.0 * sigma * sigma * p * p / (hbar * hbar));
    num += w * p * p * rho;
    den += w * rho;
  }
  return num / den;
}

} // namespace

TEST_SUITE("lv_model") {

TEST_CASE("tensor matrix elements for J = 7/2") {
  const SpinQuantumNumber j(3.5);
  CHECK(t20_diagonal(j, 3.5, 1.0) ==
        doctest::Approx(21.0 / std::sqrt(7560.0)).epsilon(1e-14));
  CHECK(t20_diagonal(j, 0.5, 1.0) ==
        doctest::Approx(-15.0 / std::sqrt(7560.0)).epsilon(1e-14));

  double sum = 0.0;
  for (int k = 0; k < 8; ++k) {
    sum += t20_diagonal(j, 3.5 - k, 1.0);
  }
  CHECK(std::abs(sum) <= 1e-12);
}

TEST_CASE("tensor element vanishes identically for J = 1/2") {
  CHECK_THROWS_AS(t20_diagonal(SpinQuantumNumber(0.5), 0.5, 1.0),
                  std::invalid_argument);
}

TEST_CASE("tracelessness for J = 1 .. 8") {
  for (int twice_j = 2; twice_j <= 16; ++twice_j) {
    const SpinQuantumNumber j = SpinQuantumNumber::from_twice(twice_j);
    double sum = 0.0;
    for (std::size_t k = 0; k < j.dimension(); ++k) {
      sum += t20_diagonal(j, j.m_value(k), 1.0);
    }
    CHECK(std::abs(sum) <= 1e-12);
  }
}

TEST_CASE("ratio law and m -> -m symmetry") {
  const SpinQuantumNumber j(3.0);
  const double jj = 3.0 * 4.0;
  for (double m1 = -3.0; m1 <= 3.0; m1 += 1.0) {
    CHECK(t20_diagonal(j, m1, 1.0) == t20_diagonal(j, -m1, 1.0)); // exact
    for (double m2 = -3.0; m2 <= 3.0; m2 += 1.0) {
      const double denom = 3.0 * m2 * m2 - jj;
      if (std::abs(denom) < 1e-12 || std::abs(t20_diagonal(j, m2, 1.0)) < 1e-15) {
        continue;
      }
      const double ratio = t20_diagonal(j, m1, 1.0) / t20_diagonal(j, m2, 1.0);
      CHECK(ratio == doctest::Approx((3.0 * m1 * m1 - jj) / denom).epsilon(1e-12));
    }
  }
}

TEST_CASE("anisotropy expectation value of the Gaussian wavepacket") {
  const double me = constants::kElectronMass;
  const double hbar = constants::kHbar;

  // isotropic -> exactly zero
  GaussianWavepacket iso{1e-9, 1e-9, 1e-9, me};
  CHECK(delta_h_expectation(iso, 0.7) == 0.0);

  // flat in z: <p^2> - 3<pz^2> = 2 hbar^2/(4 sigma^2)
  const double inf = std::numeric_limits<double>::infinity();
  GaussianWavepacket pancake{1e-10, 1e-10, inf, me};
  const double expected = -1.0 / (6.0 * me) * 2.0 * hbar * hbar / (4.0 * 1e-20);
  CHECK(delta_h_expectation(pancake, 1.0) == doctest::Approx(expected).epsilon(1e-14));

  // quadrature oracle for the anisotropic case
  GaussianWavepacket aniso{2e-10, 3e-10, 5e-10, me};
  const double px2 = p2_quadrature(2e-10);
  const double py2 = p2_quadrature(3e-10);
  const double pz2 = p2_quadrature(5e-10);
  const double oracle = -0.5 / (6.0 * me) * (px2 + py2 + pz2 - 3.0 * pz2);
  CHECK(delta_h_expectation(aniso, 0.5) == doctest::Approx(oracle).epsilon(1e-7));

  CHECK(delta_h_expectation(aniso, 0.0) == 0.0);

  // linear in the coefficient
  CHECK(delta_h_expectation(aniso, 2.0) ==
        doctest::Approx(2.0 * delta_h_expectation(aniso, 1.0)).epsilon(1e-15));

  GaussianWavepacket bad{0.0, 1e-9, 1e-9, me};
  CHECK_THROWS_AS(delta_h_expectation(bad, 1.0), std::invalid_argument);
  GaussianWavepacket badmass{1e-9, 1e-9, 1e-9, 0.0};
  CHECK_THROWS_AS(delta_h_expectation(badmass, 1.0), std::invalid_argument);
}

TEST_CASE("effective Hamiltonian kappa Jz^2") {
  const SpinOperators half = make_spin_ops(SpinQuantumNumber(0.5));
  const double kappa = 0.37;
  const CMatrix h_half = effective_lv_hamiltonian(half, kappa);
  CHECK(max_abs_diff(h_half, cplx{kappa / 4.0, 0.0} * CMatrix::identity(2)) == 0.0);

  const SpinOperators ops = make_spin_ops(SpinQuantumNumber(3.5));
  const CMatrix h = effective_lv_hamiltonian(ops, 1.0);
  const double expected[8] = {49.0 / 4, 25.0 / 4, 9.0 / 4, 1.0 / 4,
                              1.0 / 4,  9.0 / 4,  25.0 / 4, 49.0 / 4};
  for (int k = 0; k < 8; ++k) {
    CHECK(h(k, k).real() == expected[k]);
  }

  CHECK(max_abs(effective_lv_hamiltonian(ops, 0.0)) == 0.0);

  // commutes with Jz exactly (both diagonal)
  CHECK(max_abs_diff(h * ops.jz, ops.jz * h) == 0.0);
}

TEST_CASE("kappa from the anisotropy coefficient") {
  LvParams lv;
  lv.c02 = 1e-23;
  lv.freq_factor_hz = 3.9e16;
  CHECK(kappa_from_c02(lv, 12.0) == doctest::Approx(2.042e-7).epsilon(2e-3));
  CHECK(lv_energy_shift(lv) == doctest::Approx(2.584e-40).epsilon(1e-3));

  LvParams off = lv;
  off.c02 = 0.0;
  CHECK(kappa_from_c02(off, 12.0) == 0.0);

  CHECK_THROWS_AS(kappa_from_c02(lv, 0.0), std::invalid_argument);

  LvParams bad = lv;
  bad.freq_factor_hz = -1.0;
  CHECK_THROWS_AS(lv_energy_shift(bad), std::invalid_argument);
  CHECK_THROWS_AS(kappa_from_c02(bad, 12.0), std::invalid_argument);
}

} // TEST_SUITE
