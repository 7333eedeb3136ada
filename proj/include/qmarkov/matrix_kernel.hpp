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

#include <complex>

#include <Eigen/Dense>

namespace qmarkov {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr Complex kI{0.0, 1.0};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column k of `vectors` pairs with `values[k]` and has its
/// largest-magnitude component real and positive (first index wins ties).
struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;

  ComplexMatrix reconstruct() const;
};

// Frobenius norm of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

void require_square(const ComplexMatrix& m, const char* what);

HermitianEigen eig_hermitian(const ComplexMatrix& m,
                             double tol = kDefaultTolerance);

/// Matrix exponential by scaling and squaring of the Taylor series. The
/// argument is halved until its 1-norm is at most 1/2, so non-normal
/// inputs (generator superoperators) are handled without diagonalizing.
ComplexMatrix expm(const ComplexMatrix& m);

/// True iff the smallest eigenvalue is >= -tol * max(1, ||m||_F).
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTolerance);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Column-stacking vectorization: entry (a, b) of an N x N matrix lands at
// index a + b * N.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n);

}  // namespace qmarkov
