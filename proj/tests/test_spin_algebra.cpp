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
#include <complex>

#include "spinlv/cmatrix.hpp"
#include "spinlv/constants.hpp"
#include "spinlv/rng.hpp"
#include "spinlv/spin_ops.hpp"

using namespace spinlv;

namespace {

constexpr double kPi = constants::kPi;

CMatrix random_hermitian(std::mt19937_64& gen, std::size_t n) {
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = cplx{2.0 * rng::uniform01(gen) - 1.0, 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v{2.0 * rng::uniform01(gen) - 1.0, 2.0 * rng::uniform01(gen) - 1.0};
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

CMatrix random_matrix(std::mt19937_64& gen, std::size_t n) {
  CMatrix a(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    a.data()[i] = cplx{2.0 * rng::uniform01(gen) - 1.0, 2.0 * rng::uniform01(gen) - 1.0};
  }
  return a;
}

// Independent oracle: plain power series of exp(-i H t), no eigensolver.
CMatrix expm_series(const CMatrix& h, double t) {
  const std::size_t n = h.dim();
  const CMatrix a = cplx{0.0, -t} * h;
  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k < 80; ++k) {
    term = cplx{1.0 / k, 0.0} * (term * a);
    sum = sum + term;
  }
  return sum;
}

double commutator_error(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
  // || [a, b] - i c ||_max
  return max_abs_diff(a * b - b * a, cplx{0.0, 1.0} * c);
}

} // namespace

TEST_SUITE("spin_algebra") {

TEST_CASE("spin quantum number validation") {
  CHECK_THROWS_AS(SpinQuantumNumber(0.3), std::invalid_argument);
  CHECK_THROWS_AS(SpinQuantumNumber(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpinQuantumNumber(-0.5), std::invalid_argument);
  CHECK(SpinQuantumNumber(0.5).dimension() == 2);
  CHECK(SpinQuantumNumber(3.5).dimension() == 8);
  CHECK(SpinQuantumNumber(3.5).basis_index(-3.5) == 7);
  CHECK(SpinQuantumNumber(3.5).m_value(0) == 3.5);
  CHECK_THROWS_AS(SpinQuantumNumber(1.0).basis_index(0.5), std::invalid_argument);
}

TEST_CASE("spin-1/2 operators are Pauli matrices over two") {
  const SpinOperators ops = make_spin_ops(SpinQuantumNumber(0.5));
  CHECK(ops.jz(0, 0) == cplx{0.5, 0.0});
  CHECK(ops.jz(1, 1) == cplx{-0.5, 0.0});
  CHECK(ops.jx(0, 1) == cplx{0.5, 0.0});
  CHECK(ops.jx(1, 0) == cplx{0.5, 0.0});
  CHECK(std::abs(ops.jy(0, 1) - cplx{0.0, -0.5}) < 1e-15);
  CHECK(std::abs(ops.jy(1, 0) - cplx{0.0, 0.5}) < 1e-15);
}

TEST_CASE("spin-1 diagonal and Casimir") {
  const SpinOperators ops = make_spin_ops(SpinQuantumNumber(1.0));
  CHECK(ops.jz(0, 0).real() == 1.0);
  CHECK(ops.jz(1, 1).real() == 0.0);
  CHECK(ops.jz(2, 2).real() == -1.0);
  CHECK(max_abs_diff(ops.jsq, cplx{2.0, 0.0} * CMatrix::identity(3)) < 1e-12);
}

TEST_CASE("j = 7/2 construction") {
  const SpinOperators ops = make_spin_ops(SpinQuantumNumber(3.5));
  CHECK(ops.jz.dim() == 8);
  const EighResult eg = eigh(ops.jz);
  CHECK(eg.values.back() == doctest::Approx(3.5).epsilon(1e-14));
  CHECK(eg.values.front() == doctest::Approx(-3.5).epsilon(1e-14));
}

TEST_CASE("commutators and Casimir for j up to 8") {
  for (int twice_j = 1; twice_j <= 16; ++twice_j) {
    const SpinOperators ops = make_spin_ops(SpinQuantumNumber::from_twice(twice_j));
    CHECK(commutator_error(ops.jx, ops.jy, ops.jz) <= 1e-12);
    CHECK(commutator_error(ops.jy, ops.jz, ops.jx) <= 1e-12);
    CHECK(commutator_error(ops.jz, ops.jx, ops.jy) <= 1e-12);
    const double jv = 0.5 * twice_j;
    CHECK(max_abs_diff(ops.jsq,
                       cplx{jv * (jv + 1.0), 0.0} *
                           CMatrix::identity(ops.j.dimension())) <= 1e-12);
    CHECK(max_abs_diff(adjoint(ops.jplus), ops.jminus) == 0.0);
    CHECK(hermiticity_error(ops.jx) == 0.0);
    CHECK(hermiticity_error(ops.jy) == 0.0);
    CHECK(hermiticity_error(ops.jz) == 0.0);
  }
}

TEST_CASE("matrix exponential examples") {
  const SpinOperators half = make_spin_ops(SpinQuantumNumber(0.5));

  // H = 0 -> identity
  CMatrix zero(4);
  CHECK(max_abs_diff(expm_hermitian(zero, 2.7), CMatrix::identity(4)) < 1e-15);

  // H = Jz, t = pi -> diag(e^{-i pi/2}, e^{+i pi/2})
  const CMatrix u = expm_hermitian(half.jz, kPi);
  CHECK(std::abs(u(0, 0) - cplx{0.0, -1.0}) < 1e-12);
  CHECK(std::abs(u(1, 1) - cplx{0.0, 1.0}) < 1e-12);
  CHECK(std::abs(u(0, 1)) < 1e-15);

  // H = Jx, t = 2 pi -> -identity (spinor sign flip), against the series oracle
  const CMatrix v = expm_hermitian(half.jx, 2.0 * kPi);
  CHECK(max_abs_diff(v, cplx{-1.0, 0.0} * CMatrix::identity(2)) < 1e-12);
  CHECK(max_abs_diff(v, expm_series(half.jx, 2.0 * kPi)) < 1e-12);

  // series oracle also agrees on a bigger spin
  const SpinOperators ops2 = make_spin_ops(SpinQuantumNumber(2.0));
  CHECK(max_abs_diff(expm_hermitian(ops2.jy, 0.83), expm_series(ops2.jy, 0.83)) < 1e-12);
}

TEST_CASE("matrix exponential rejects non-Hermitian input") {
  CMatrix bad(2);
  bad(0, 1) = cplx{1.0, 0.0}; // lower left stays zero
  CHECK_THROWS_AS(expm_hermitian(bad, 1.0), std::runtime_error);
}

TEST_CASE("unitarity of exponentials for random Hermitian matrices") {
  auto gen = rng::engine(7, {0x11});
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng::uniform01(gen) * 16);
    const CMatrix h = random_hermitian(gen, n);
    const CMatrix u = expm_hermitian(h, 1.0 + rng::uniform01(gen));
    CHECK(unitarity_error(u) <= 1e-12);
  }
}

TEST_CASE("rotation examples") {
  const SpinOperators half = make_spin_ops(SpinQuantumNumber(0.5));

  CHECK(max_abs_diff(rotation(half, Axis::X, 0.0), CMatrix::identity(2)) < 1e-15);

  // closed form of exp(-i (pi/2) Jx) for spin-1/2
  const CMatrix rx = rotation(half, Axis::X, kPi / 2.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(rx(0, 0) - cplx{inv_sqrt2, 0.0}) < 1e-12);
  CHECK(std::abs(rx(0, 1) - cplx{0.0, -inv_sqrt2}) < 1e-12);
  CHECK(std::abs(rx(1, 0) - cplx{0.0, -inv_sqrt2}) < 1e-12);
  CHECK(std::abs(rx(1, 1) - cplx{inv_sqrt2, 0.0}) < 1e-12);

  // inverse composition
  const SpinOperators ops = make_spin_ops(SpinQuantumNumber(2.5));
  const CMatrix fwd = rotation(ops, Axis::Y, 0.37);
  const CMatrix bwd = rotation(ops, Axis::Y, -0.37);
  CHECK(max_abs_diff(fwd * bwd, CMatrix::identity(6)) <= 1e-12);

  CHECK_THROWS_AS(rotation(ops, Axis::X, std::nan("")), std::invalid_argument);
}

TEST_CASE("rotation periodicity: 4 pi for half-integer j, 2 pi for integer j") {
  for (int twice_j = 1; twice_j <= 8; ++twice_j) {
    const SpinOperators ops = make_spin_ops(SpinQuantumNumber::from_twice(twice_j));
    const CMatrix id = CMatrix::identity(ops.j.dimension());
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      if (twice_j % 2 == 1) {
        CHECK(max_abs_diff(rotation(ops, axis, 4.0 * kPi), id) <= 1e-10);
        // a 2 pi turn is a global sign flip, not the identity
        CHECK(max_abs_diff(rotation(ops, axis, 2.0 * kPi), cplx{-1.0, 0.0} * id) <= 1e-10);
      } else {
        CHECK(max_abs_diff(rotation(ops, axis, 2.0 * kPi), id) <= 1e-10);
      }
    }
  }
}

TEST_CASE("tensor product") {
  CHECK(max_abs_diff(kron(CMatrix::identity(2), CMatrix::identity(3)),
                     CMatrix::identity(6)) == 0.0);

  CMatrix d(2);
  d(0, 0) = cplx{3.0, 0.0};
  d(1, 1) = cplx{-2.0, 0.0};
  const CMatrix lifted = kron(d, CMatrix::identity(2));
  CHECK(lifted.dim() == 4);
  CHECK(lifted(0, 0).real() == 3.0);
  CHECK(lifted(1, 1).real() == 3.0);
  CHECK(lifted(2, 2).real() == -2.0);
  CHECK(lifted(3, 3).real() == -2.0);

  // (A (x) B)(C (x) D) = AC (x) BD on random 2x2 blocks
  auto gen = rng::engine(5, {0x22});
  for (int rep = 0; rep < 10; ++rep) {
    const CMatrix a = random_matrix(gen, 2), b = random_matrix(gen, 2);
    const CMatrix c = random_matrix(gen, 2), e = random_matrix(gen, 2);
    CHECK(max_abs_diff(kron(a, b) * kron(c, e), kron(a * c, b * e)) < 1e-13);
  }
}

TEST_CASE("state helpers") {
  const SpinQuantumNumber j(3.5);
  const CVector s = basis_state(j, -0.5);
  CHECK(s[4] == cplx{1.0, 0.0});
  CHECK(norm(s) == 1.0);

  const CVector pair = superposition_state(j, -3.5, -0.5);
  CHECK(std::abs(norm(pair) - 1.0) < 1e-15);
  CHECK(std::abs(pair[7] - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK_THROWS_AS(superposition_state(j, 0.5, 0.5), std::invalid_argument);
}

} // TEST_SUITE
