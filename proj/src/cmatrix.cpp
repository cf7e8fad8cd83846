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

#include "spinlv/cmatrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "spinlv/kernels.hpp"

namespace spinlv {
namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

} // namespace

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = cplx{1.0, 0.0};
  }
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "matmul");
  CMatrix c(a.dim());
  kernels::active().matmul(a.data(), b.data(), c.data(), a.dim());
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "add");
  CMatrix c = a;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
    c.data()[i] += b.data()[i];
  }
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "sub");
  CMatrix c = a;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
    c.data()[i] -= b.data()[i];
  }
  return c;
}

CMatrix operator*(cplx alpha, const CMatrix& a) {
  CMatrix c(a.dim());
  kernels::active().cscale(alpha, a.data(), c.data(), a.dim() * a.dim());
  return c;
}

CVector operator*(const CMatrix& a, const CVector& x) {
  if (x.size() != a.dim()) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  CVector y(x.size());
  kernels::active().matvec(a.data(), x.data(), y.data(), a.dim());
  return y;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(j, i) = std::conj(a(i, j));
    }
  }
  return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  CMatrix c(da * db);
  for (std::size_t ia = 0; ia < da; ++ia) {
    for (std::size_t ja = 0; ja < da; ++ja) {
      const cplx alpha = a(ia, ja);
      for (std::size_t ib = 0; ib < db; ++ib) {
        // rows of B scaled into the (ia, ja) block, contiguous in memory
        kernels::active().cscale(alpha, b.row(ib),
                                 c.data() + (ia * db + ib) * c.dim() + ja * db,
                                 db);
      }
    }
  }
  return c;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
    m = std::max(m, std::abs(a.data()[i]));
  }
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double hermiticity_error(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

double unitarity_error(const CMatrix& u) {
  return max_abs_diff(adjoint(u) * u, CMatrix::identity(u.dim()));
}

double norm(const CVector& x) {
  return std::sqrt(kernels::active().sum_abs_sq(x.data(), x.size()));
}

void normalize(CVector& x) {
  const double n = norm(x);
  if (n == 0.0) {
    throw std::invalid_argument("cannot normalize a zero vector");
  }
  for (cplx& v : x) {
    v /= n;
  }
}

cplx inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

std::vector<double> born_probabilities(const CVector& x) {
  std::vector<double> p(x.size());
  kernels::active().abs_sq(x.data(), p.data(), x.size());
  return p;
}

EighResult eigh(const CMatrix& h, double hermiticity_tol) {
  const double herm = hermiticity_error(h);
  if (herm > hermiticity_tol) {
    throw std::runtime_error("eigh: matrix is not Hermitian (max deviation " +
                             std::to_string(herm) + ")");
  }
  EighResult res;
  res.values.resize(h.dim());
  res.vectors = h;
  const lapack_int n = static_cast<lapack_int>(h.dim());
  const lapack_int info = LAPACKE_zheev(
      LAPACK_ROW_MAJOR, 'V', 'U', n,
      reinterpret_cast<lapack_complex_double*>(res.vectors.data()), n,
      res.values.data());
  if (info != 0) {
    throw std::runtime_error("eigh: zheev failed with info " + std::to_string(info));
  }
  return res;
}

CMatrix expm_hermitian(const CMatrix& h, double t) {
  EighResult eg = eigh(h);
  const std::size_t n = h.dim();
  // V e^{-i lambda t}, scaling columns of V
  CMatrix vd = eg.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = -eg.values[k] * t;
    const cplx e{std::cos(phase), std::sin(phase)};
    for (std::size_t i = 0; i < n; ++i) {
      vd(i, k) *= e;
    }
  }
  return vd * adjoint(eg.vectors);
}

} // namespace spinlv
