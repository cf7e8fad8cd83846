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

#include <cstddef>

#include "spinlv/cmatrix.hpp"

// Angular-momentum operator algebra for arbitrary spin j (hbar = 1).
// Basis convention used throughout the project: index 0 is m = +j and the
// projection decreases by one per row, down to m = -j.

namespace spinlv {

class SpinQuantumNumber {
public:
  // j must be a positive half-integer (1/2, 1, 3/2, ...).
  explicit SpinQuantumNumber(double j);
  static SpinQuantumNumber from_twice(int twice_j);

  double value() const { return 0.5 * static_cast<double>(twice_j_); }
  int twice() const { return twice_j_; }
  std::size_t dimension() const { return static_cast<std::size_t>(twice_j_) + 1; }
  bool half_integer() const { return twice_j_ % 2 != 0; }

  // m = j - index
  double m_value(std::size_t index) const;
  // index of |j, m>; throws if m is not a valid projection of this j
  std::size_t basis_index(double m) const;

  bool operator==(const SpinQuantumNumber&) const = default;

private:
  int twice_j_;
};

enum class Axis { X, Y, Z };

struct SpinOperators {
  SpinQuantumNumber j;
  CMatrix jx, jy, jz;
  CMatrix jplus, jminus;
  CMatrix jsq; // built as Jx^2 + Jy^2 + Jz^2, not as j(j+1) I
};

SpinOperators make_spin_ops(SpinQuantumNumber j);

const CMatrix& axis_operator(const SpinOperators& ops, Axis axis);

// exp(-i angle J_axis); throws on non-finite angle.
CMatrix rotation(const SpinOperators& ops, Axis axis, double angle);

// |j, m>
CVector basis_state(SpinQuantumNumber j, double m);
// (|j, m1> + |j, m2>)/sqrt(2)
CVector superposition_state(SpinQuantumNumber j, double m1, double m2);

} // namespace spinlv
