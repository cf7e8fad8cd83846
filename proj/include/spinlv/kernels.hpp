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
#include <string>

// Low-level complex arithmetic kernels. Each operation has a scalar
// reference implementation and (on x86-64) an AVX2+FMA variant; the active
// backend is selected once at runtime from CPU features, overridable with
// the SPINLV_KERNELS environment variable or force_backend(). The two
// backends are equivalence-tested against each other in the test suite.
//
// All matrices are dense, square, row-major, std::complex<double>.

namespace spinlv::kernels {

using cplx = std::complex<double>;

struct Backend {
  const char* name;
  // y = A x
  void (*matvec)(const cplx* a, const cplx* x, cplx* y, std::size_t n);
  // c = A B
  void (*matmul)(const cplx* a, const cplx* b, cplx* c, std::size_t n);
  // y[i] = a[i] * b[i]
  void (*cmul)(const cplx* a, const cplx* b, cplx* y, std::size_t n);
  // y[i] = alpha * x[i]
  void (*cscale)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // y[i] += alpha * x[i]
  void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // y[i] = |x[i]|^2
  void (*abs_sq)(const cplx* x, double* y, std::size_t n);
  // sum_i |x[i]|^2
  double (*sum_abs_sq)(const cplx* x, std::size_t n);
};

const Backend& scalar_backend();

// Null when the AVX2 variant was not compiled in (non-x86 build).
const Backend* avx2_backend();

bool avx2_compiled();
bool avx2_runtime_supported();

// Active backend, resolved on first use. Selection order: forced name if
// force_backend() was called, else SPINLV_KERNELS={scalar,avx2,auto}, else
// AVX2 when the CPU supports it.
const Backend& active();

// Throws std::invalid_argument for unknown names, std::runtime_error when
// the requested backend is unavailable on this machine.
void force_backend(const std::string& name);

} // namespace spinlv::kernels
