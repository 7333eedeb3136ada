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

#include "qmarkov/matrix_kernel.hpp"

namespace qmarkov {

/// Linear map on N x N matrices stored as an N^2 x N^2 matrix acting on
/// column-stacked operands: vec(E(rho)) = M vec(rho), with rho(a, b) at
/// index a + b * N.
///
/// The Choi matrix used for complete-positivity checks reshuffles M as
///   choi(a * N + c, b * N + d) = M(a + b * N, c + d * N) = <a|E(|c><d|)|b>,
/// i.e. row-block a and row-in-block c pair the output row index with the
/// input row index. For the qubit identity channel M = I_4, and the only
/// nonzero Choi entries are choi(0,0) = choi(0,3) = choi(3,0) = choi(3,3) = 1,
/// the projector onto |00> + |11>.
class Superoperator {
 public:
  Superoperator(int dim, ComplexMatrix m);

  static Superoperator identity(int dim);

  int dim() const noexcept { return dim_; }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  ComplexMatrix choi() const;

  /// max over matrix units |c><d| of |tr E(|c><d|) - delta_cd|.
  double trace_preservation_defect() const;
  bool is_trace_preserving(double tol = 1e-10) const;
  bool is_completely_positive(double tol = 1e-9) const;

 private:
  int dim_;
  ComplexMatrix m_;
};

/// e1 after e2, i.e. the matrix product m1 * m2.
Superoperator compose(const Superoperator& e1, const Superoperator& e2);

/// Frobenius distance between the two matrices.
double distance(const Superoperator& a, const Superoperator& b);

}  // namespace qmarkov
