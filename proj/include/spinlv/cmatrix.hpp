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

#include <complex>
#include <cstddef>
#include <vector>

// Dense square complex matrices and state vectors. Dimensions stay small
// (a few tens at most: 2j+1 per spin, products for two-atom states), so
// everything is dense, value-semantic and immutable-friendly; the heavy
// inner loops route through the kernels backend.

namespace spinlv {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

class CMatrix {
public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx{0.0, 0.0}) {}

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  const cplx* row(std::size_t r) const { return a_.data() + r * dim_; }

  bool operator==(const CMatrix&) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

// C = A B; throws on dimension mismatch.
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx alpha, const CMatrix& a);

CVector operator*(const CMatrix& a, const CVector& x);
CMatrix adjoint(const CMatrix& a);

// Kronecker product, dim = dimA * dimB.
CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double hermiticity_error(const CMatrix& a);
// max |U^dag U - I|
double unitarity_error(const CMatrix& u);

double norm(const CVector& x);
void normalize(CVector& x);
cplx inner(const CVector& a, const CVector& b); // <a|b>
std::vector<double> born_probabilities(const CVector& x);

struct EighResult {
  std::vector<double> values; // ascending
  CMatrix vectors;            // eigenvectors in columns
};

// Hermitian eigendecomposition (LAPACK zheev behind the scenes).
// Throws std::runtime_error if the input is not Hermitian within tol.
EighResult eigh(const CMatrix& h, double hermiticity_tol = 1e-10);

// exp(-i H t) for Hermitian H, via eigendecomposition.
CMatrix expm_hermitian(const CMatrix& h, double t);

} // namespace spinlv
