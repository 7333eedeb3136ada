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

#include <array>

#include "qmarkov/lindblad.hpp"
#include "qmarkov/superoperator.hpp"

namespace qmarkov {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Change of basis induced by U^dagger F_a U = c_ag F_g.
struct AdjointAction {
  ComplexMatrix u;
  ComplexMatrix c;
};

/// Proper rotation of Bloch space.
class Rotation3 {
 public:
  Rotation3() : g_(Matrix3::Identity()) {}
  /// Throws InvalidArgument unless g^T g = I and det g = +1 within tol.
  explicit Rotation3(const Matrix3& g, double tol = 1e-10);

  const Matrix3& matrix() const noexcept { return g_; }
  Rotation3 inverse() const { return Rotation3(g_.transpose()); }
  Rotation3 operator*(const Rotation3& other) const { return Rotation3(g_ * other.g_); }

 private:
  Matrix3 g_;
};

struct AxisAngle {
  Vector3 axis;  // unit vector
  double angle;  // in [0, pi]
};

/// c_ag = tr(F_g^dagger U^dagger F_a U). Any unitary is accepted; a global
/// phase of U does not change c. Throws NotUnitary.
AdjointAction adjoint_of(const ComplexMatrix& u, const BasisPtr& basis);

/// C^T a C^*.
GksMatrix conjugate_gks(const GksMatrix& g, const AdjointAction& act);

/// Generator of U^dagger E_t(U rho U^dagger) U: H -> U^dagger H U and the
/// GKS matrix conjugated as in conjugate_gks.
Generator conjugate_generator(const Generator& g, const AdjointAction& act);

/// Superoperator of rho -> U^dagger E(U rho U^dagger) U.
Superoperator conjugate_channel(const Superoperator& e, const ComplexMatrix& u);

/// The SO(3) generators (G_c)_ab = i epsilon_cab.
const std::array<ComplexMatrix, 3>& so3_generators();

/// exp(i angle (axis . G)), a right-handed rotation by `angle` about
/// `axis`. Throws BadAxis unless |axis| = 1 within 1e-12.
Rotation3 so3_rotation(const Vector3& axis, double angle);

AxisAngle axis_angle(const Rotation3& r);

/// U = exp(i (angle/2) axis . sigma), whose adjoint action in the Pauli
/// basis has C^T = r.
ComplexMatrix su2_from_rotation(const Rotation3& r);

}  // namespace qmarkov
