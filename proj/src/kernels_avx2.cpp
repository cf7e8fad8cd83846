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

// AVX2+FMA kernels. A __m256d holds two complex doubles [r0,i0,r1,i1];
// the complex product is one fmaddsub against the swapped operand:
//   even slots: ar*br - ai*bi, odd slots: ar*bi + ai*br.
// This file is compiled with -mavx2 -mfma only on x86-64; elsewhere it
// degrades to a stub reporting the backend as unavailable.

#include "spinlv/kernels.hpp"

#if defined(SPINLV_AVX2_BUILD)

#include <immintrin.h>

namespace spinlv::kernels {
namespace {

// Elementwise complex product of the two lanes.
inline __m256d cprod(__m256d a, __m256d b) {
  __m256d ar = _mm256_movedup_pd(a);        // [ar0, ar0, ar1, ar1]
  __m256d ai = _mm256_permute_pd(a, 0xF);   // [ai0, ai0, ai1, ai1]
  __m256d bs = _mm256_permute_pd(b, 0x5);   // [bi0, br0, bi1, br1]
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

inline cplx cmul1(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void matvec_avx2(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = reinterpret_cast<const double*>(a + i * n);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      __m256d av = _mm256_loadu_pd(row + 2 * j);
      __m256d xv = _mm256_loadu_pd(xd + 2 * j);
      acc = _mm256_add_pd(acc, cprod(av, xv));
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d sum = _mm_add_pd(lo, hi);
    cplx out{_mm_cvtsd_f64(sum), _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum))};
    for (; j < n; ++j) {
      out += cmul1(a[i * n + j], x[j]);
    }
    y[i] = out;
  }
}

inline void caxpy_avx2_raw(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  __m256d ar = _mm256_set1_pd(alpha.real());
  __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d xs = _mm256_permute_pd(xv, 0x5);
    __m256d p = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, p));
  }
  for (; i < n; ++i) {
    y[i] += cmul1(alpha, x[i]);
  }
}

void caxpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  caxpy_avx2_raw(alpha, x, y, n);
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      crow[j] = cplx{0.0, 0.0};
    }
    for (std::size_t k = 0; k < n; ++k) {
      caxpy_avx2_raw(a[i * n + k], b + k * n, crow, n);
    }
  }
}

void cmul_avx2(const cplx* a, const cplx* b, cplx* y, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d av = _mm256_loadu_pd(ad + 2 * i);
    __m256d bv = _mm256_loadu_pd(bd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, cprod(av, bv));
  }
  for (; i < n; ++i) {
    y[i] = cmul1(a[i], b[i]);
  }
}

void cscale_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  __m256d ar = _mm256_set1_pd(alpha.real());
  __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d xs = _mm256_permute_pd(xv, 0x5);
    _mm256_storeu_pd(yd + 2 * i, _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs)));
  }
  for (; i < n; ++i) {
    y[i] = cmul1(alpha, x[i]);
  }
}

void abs_sq_avx2(const cplx* x, double* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xd + 2 * i);
    __m256d sq = _mm256_mul_pd(v, v);
    __m256d h = _mm256_hadd_pd(sq, sq); // [n0, n0, n1, n1]
    y[i] = _mm_cvtsd_f64(_mm256_castpd256_pd128(h));
    y[i + 1] = _mm_cvtsd_f64(_mm256_extractf128_pd(h, 1));
  }
  for (; i < n; ++i) {
    y[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
}

double sum_abs_sq_avx2(const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d s = _mm_add_pd(lo, hi);
  double out = _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
  for (; i < n; ++i) {
    out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return out;
}

const Backend kAvx2Backend{
    "avx2",      matvec_avx2, matmul_avx2, cmul_avx2,
    cscale_avx2, caxpy_avx2,  abs_sq_avx2, sum_abs_sq_avx2,
};

} // namespace

const Backend* avx2_backend() { return &kAvx2Backend; }
bool avx2_compiled() { return true; }

} // namespace spinlv::kernels

#else // !SPINLV_AVX2_BUILD

namespace spinlv::kernels {

const Backend* avx2_backend() { return nullptr; }
bool avx2_compiled() { return false; }

} // namespace spinlv::kernels

#endif
