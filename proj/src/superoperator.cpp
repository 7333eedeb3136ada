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

#include "qmarkov/superoperator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmarkov/error.hpp"

namespace qmarkov {

Superoperator::Superoperator(int dim, ComplexMatrix m) : dim_(dim), m_(std::move(m)) {
  if (dim < 1 || m_.rows() != dim * dim || m_.cols() != dim * dim) {
    raise(ErrorCode::DimensionMismatch,
          "superoperator for dimension " + std::to_string(dim) + " must be " +
              std::to_string(dim * dim) + "x" + std::to_string(dim * dim));
  }
}

Superoperator Superoperator::identity(int dim) {
  return Superoperator(dim, ComplexMatrix::Identity(dim * dim, dim * dim));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    raise(ErrorCode::DimensionMismatch, "superoperator applied to a matrix of the wrong size");
  }
  return unvec(m_ * vec(rho), dim_);
}

ComplexMatrix Superoperator::choi() const {
  const int n = dim_;
  ComplexMatrix c(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d)
          c(a * n + cc, b * n + d) = m_(a + b * n, cc + d * n);
  return c;
}

double Superoperator::trace_preservation_defect() const {
  const int n = dim_;
  double worst = 0.0;
  for (int col = 0; col < n * n; ++col) {
    Complex tr = 0.0;
    for (int a = 0; a < n; ++a) tr += m_(a + a * n, col);
    const int c = col % n;
    const int d = col / n;
    worst = std::max(worst, std::abs(tr - (c == d ? 1.0 : 0.0)));
  }
  return worst;
}

bool Superoperator::is_trace_preserving(double tol) const {
  return trace_preservation_defect() <= tol;
}

bool Superoperator::is_completely_positive(double tol) const {
  const ComplexMatrix c = choi();
  // The Choi matrix of a Hermiticity-preserving map is Hermitian; anything
  // else is not completely positive.
  if (hermiticity_defect(c) > tol * std::max(1.0, c.norm())) return false;
  return is_psd(c, tol);
}

Superoperator compose(const Superoperator& e1, const Superoperator& e2) {
  if (e1.dim() != e2.dim()) {
    raise(ErrorCode::DimensionMismatch, "compose: superoperators act on different dimensions");
  }
  return Superoperator(e1.dim(), e1.matrix() * e2.matrix());
}

double distance(const Superoperator& a, const Superoperator& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorCode::DimensionMismatch, "distance: superoperators act on different dimensions");
  }
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace qmarkov
