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

// Scalar reference kernels. Written with explicit real/imag arithmetic so
// the compiler cannot re-associate the complex products differently from
// the SIMD variants' documented formula.

#include "spinlv/kernels.hpp"

namespace spinlv::kernels {
namespace {

inline cplx cmul1(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void matvec_scalar(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = a + i * n;
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      acc += cmul1(row[j], x[j]);
    }
    y[i] = acc;
  }
}

void caxpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += cmul1(alpha, x[i]);
  }
}

void matmul_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      crow[j] = cplx{0.0, 0.0};
    }
    for (std::size_t k = 0; k < n; ++k) {
      caxpy_scalar(a[i * n + k], b + k * n, crow, n);
    }
  }
}

void cmul_scalar(const cplx* a, const cplx* b, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = cmul1(a[i], b[i]);
  }
}

void cscale_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = cmul1(alpha, x[i]);
  }
}

void abs_sq_scalar(const cplx* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
}

double sum_abs_sq_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

} // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar",       matvec_scalar, matmul_scalar,     cmul_scalar,
      cscale_scalar,  caxpy_scalar,  abs_sq_scalar,     sum_abs_sq_scalar,
  };
  return backend;
}

} // namespace spinlv::kernels
