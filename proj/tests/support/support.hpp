/* Copyright 2026 The qmarkov Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "qmarkov/random.hpp"
#include "qmarkov/superoperator.hpp"

namespace qmarkov::testing {

inline ComplexMatrix sigma(int k) {
  ComplexMatrix s(2, 2);
  switch (k) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline ComplexMatrix random_complex(Rng& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, int n) {
  const ComplexMatrix b = random_complex(rng, n, n);
  return 0.5 * (b + b.adjoint());
}

// B B^dagger rescaled to unit trace, then by `scale`.
inline ComplexMatrix random_psd(Rng& rng, int n, double scale = 1.0) {
  const ComplexMatrix b = random_complex(rng, n, n);
  ComplexMatrix a = b * b.adjoint();
  return scale * a / a.trace().real();
}

inline ComplexMatrix random_real_psd(Rng& rng, int n, double scale = 1.0) {
  RealMatrix b(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) b(i, j) = rng.normal();
  RealMatrix a = b * b.transpose();
  return (scale * a / a.trace()).cast<Complex>();
}

// Haar-random SU(2) from a unit quaternion.
inline ComplexMatrix random_su2(Rng& rng) {
  Eigen::Vector4d q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  q.normalize();
  ComplexMatrix u(2, 2);
  u << Complex(q(0), q(3)), Complex(q(2), q(1)), Complex(-q(2), q(1)), Complex(q(0), -q(3));
  return u;
}

// Truncated power series; only for arguments of modest norm.
inline ComplexMatrix series_exp(const ComplexMatrix& m, int terms = 80) {
  const auto n = m.rows();
  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k < terms; ++k) {
    term = term * m / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

// Superoperator assembled column by column from the action on |c><d|.
inline ComplexMatrix superop_from_action(int dim,
                                         const std::function<ComplexMatrix(const ComplexMatrix&)>& f) {
  const int d2 = dim * dim;
  ComplexMatrix m(d2, d2);
  for (int d = 0; d < dim; ++d) {
    for (int c = 0; c < dim; ++c) {
      ComplexMatrix unit = ComplexMatrix::Zero(dim, dim);
      unit(c, d) = 1.0;
      const ComplexMatrix out = f(unit);
      for (int b = 0; b < dim; ++b)
        for (int a = 0; a < dim; ++a) m(a + b * dim, c + d * dim) = out(a, b);
    }
  }
  return m;
}

// -i[H, rho] + sum a_ab ([F_a rho, F_b^dagger] + [F_a, rho F_b^dagger]) over
// explicit operators, without going through the library.
inline ComplexMatrix lindblad_rhs(const std::vector<ComplexMatrix>& f, const ComplexMatrix& a,
                                  const ComplexMatrix& h, const ComplexMatrix& rho) {
  ComplexMatrix out = Complex(0, -1) * (h * rho - rho * h);
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = 0; j < f.size(); ++j) {
      const Complex c = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (c == Complex(0.0)) continue;
      const ComplexMatrix fj = f[j].adjoint();
      out += c * ((f[i] * rho * fj - rho * fj * f[i]) + (f[i] * rho * fj - fj * f[i] * rho));
    }
  }
  return out;
}

}  // namespace qmarkov::testing
