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
#include "qmarkov/operator_basis.hpp"
#include "qmarkov/superoperator.hpp"

namespace qmarkov {

/// Coefficients a_ab of the dissipative part of a generator over an
/// operator basis (units of inverse time). Positivity is not enforced here
/// so that invalid candidates can still be inspected; see is_valid_gks.
class GksMatrix {
 public:
  GksMatrix(BasisPtr basis, ComplexMatrix a);

  static GksMatrix zero(BasisPtr basis);

  const OperatorBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  int dim() const noexcept { return basis_->dim(); }
  const ComplexMatrix& matrix() const noexcept { return a_; }

  /// (a + a^dagger) / 2.
  GksMatrix symmetrized() const;

 private:
  BasisPtr basis_;
  ComplexMatrix a_;
};

GksMatrix operator+(const GksMatrix& x, const GksMatrix& y);
GksMatrix operator*(double s, const GksMatrix& x);

/// Z(rho) = -i[H, rho] + a_ab ([F_a rho, F_b^dagger] + [F_a, rho F_b^dagger]).
class Generator {
 public:
  explicit Generator(GksMatrix gks);
  Generator(ComplexMatrix hamiltonian, GksMatrix gks);

  const ComplexMatrix& hamiltonian() const noexcept { return h_; }
  const GksMatrix& gks() const noexcept { return gks_; }
  const OperatorBasis& basis() const noexcept { return gks_.basis(); }
  const BasisPtr& basis_ptr() const noexcept { return gks_.basis_ptr(); }
  int dim() const noexcept { return gks_.dim(); }

 private:
  ComplexMatrix h_;
  GksMatrix gks_;
};

/// Bloch-coordinate affine form of a generator: for unit-trace rho with
/// r = bloch_vector(rho), dr/dt = L r + p.
struct AffineRep {
  RealMatrix l;
  RealVector p;
};

ComplexMatrix apply_generator(const Generator& g, const ComplexMatrix& rho);

Superoperator as_superoperator(const Generator& g);

bool is_valid_gks(const GksMatrix& g, double tol = kDefaultTolerance);

/// Components sum_{a<b} Im(a_ab) f_abc for every c.
RealVector unitality_residuals(const GksMatrix& g);

/// Coefficients tr(F_c Z(I)) of the image of the identity.
RealVector identity_image(const GksMatrix& g);

/// Unital iff max_c |sum_{a<b} Im(a_ab) f_abc| <= tol. The verdict is
/// cross-checked against Z(I) = -4 sum Im(a_ab) f_abc F_c computed by direct
/// application; a disagreement throws InternalInconsistency.
bool is_unital(const GksMatrix& g, double tol = kDefaultTolerance);

AffineRep to_affine(const Generator& g);

struct AffineInversion {
  Generator generator;
  bool psd;        // false when the affine map is not Markovian
  double residual;
};

/// Solve the linear system (Re a, Im a, H) -> (L, p) in the least-squares
/// sense. Throws UnsolvableSystem when the residual exceeds 1e-8.
AffineInversion from_affine(const AffineRep& rep, const BasisPtr& basis);

/// Real parameterization of generators over a basis with n = N^2 - 1
/// elements: n^2 entries describing the Hermitian a (diagonal, then Re/Im of
/// each upper-triangular pair), followed by n coefficients of H = h_c F_c.
int parameter_count(const OperatorBasis& basis);
Generator generator_from_parameters(const BasisPtr& basis, const RealVector& x);

}  // namespace qmarkov
