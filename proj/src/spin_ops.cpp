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

#include "spinlv/spin_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinlv {

SpinQuantumNumber::SpinQuantumNumber(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || std::abs(twice - rounded) > 1e-9 || rounded < 1.0) {
    throw std::invalid_argument("spin quantum number must be a half-integer >= 1/2, got " +
                                std::to_string(j));
  }
  twice_j_ = static_cast<int>(rounded);
}

SpinQuantumNumber SpinQuantumNumber::from_twice(int twice_j) {
  if (twice_j < 1) {
    throw std::invalid_argument("2j must be a positive integer");
  }
  return SpinQuantumNumber(0.5 * twice_j);
}

double SpinQuantumNumber::m_value(std::size_t index) const {
  if (index >= dimension()) {
    throw std::out_of_range("basis index out of range");
  }
  return value() - static_cast<double>(index);
}

std::size_t SpinQuantumNumber::basis_index(double m) const {
  const double idx = value() - m;
  const double rounded = std::round(idx);
  if (std::abs(idx - rounded) > 1e-9 || rounded < 0.0 ||
      rounded > static_cast<double>(twice_j_)) {
    throw std::invalid_argument("m = " + std::to_string(m) +
                                " is not a projection of j = " + std::to_string(value()));
  }
  return static_cast<std::size_t>(rounded);
}

SpinOperators make_spin_ops(SpinQuantumNumber j) {
  const std::size_t d = j.dimension();
  const double jv = j.value();

  CMatrix jz(d), jplus(d);
  for (std::size_t k = 0; k < d; ++k) {
    jz(k, k) = cplx{j.m_value(k), 0.0};
  }
  // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; raising moves one row up.
  for (std::size_t k = 1; k < d; ++k) {
    const double m = j.m_value(k);
    jplus(k - 1, k) = cplx{std::sqrt(jv * (jv + 1.0) - m * (m + 1.0)), 0.0};
  }
  CMatrix jminus = adjoint(jplus);

  const cplx half{0.5, 0.0};
  const cplx minus_half_i{0.0, -0.5};
  CMatrix jx = half * (jplus + jminus);
  CMatrix jy = minus_half_i * (jplus - jminus);
  CMatrix jsq = jx * jx + jy * jy + jz * jz;

  return SpinOperators{j, std::move(jx), std::move(jy), std::move(jz),
                       std::move(jplus), std::move(jminus), std::move(jsq)};
}

const CMatrix& axis_operator(const SpinOperators& ops, Axis axis) {
  switch (axis) {
    case Axis::X: return ops.jx;
    case Axis::Y: return ops.jy;
    case Axis::Z: return ops.jz;
  }
  throw std::logic_error("invalid axis");
}

CMatrix rotation(const SpinOperators& ops, Axis axis, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  return expm_hermitian(axis_operator(ops, axis), angle);
}

CVector basis_state(SpinQuantumNumber j, double m) {
  CVector v(j.dimension(), cplx{0.0, 0.0});
  v[j.basis_index(m)] = cplx{1.0, 0.0};
  return v;
}

CVector superposition_state(SpinQuantumNumber j, double m1, double m2) {
  const std::size_t i1 = j.basis_index(m1);
  const std::size_t i2 = j.basis_index(m2);
  if (i1 == i2) {
    throw std::invalid_argument("superposition requires two distinct projections");
  }
  CVector v(j.dimension(), cplx{0.0, 0.0});
  const double amp = 1.0 / std::sqrt(2.0);
  v[i1] = cplx{amp, 0.0};
  v[i2] = cplx{amp, 0.0};
  return v;
}

} // namespace spinlv
