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

#include "qmarkov/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

void require_unitary(const ComplexMatrix& u, int dim) {
  if (u.rows() != dim || u.cols() != dim) {
    raise(ErrorCode::DimensionMismatch, "unitary does not match the basis dimension");
  }
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).norm();
  if (!(defect <= 1e-10)) {
    raise(ErrorCode::NotUnitary, "matrix is not unitary (||U^dagger U - I|| = " +
                                     std::to_string(defect) + ")");
  }
}

}  // namespace

Rotation3::Rotation3(const Matrix3& g, double tol) : g_(g) {
  const double orth = (g.transpose() * g - Matrix3::Identity()).norm();
  const double det = g.determinant();
  if (!(orth <= tol) || !(std::abs(det - 1.0) <= tol)) {
    raise(ErrorCode::InvalidArgument, "matrix is not a proper rotation");
  }
}

AdjointAction adjoint_of(const ComplexMatrix& u, const BasisPtr& basis) {
  require_unitary(u, basis->dim());
  const int n = basis->size();
  AdjointAction act{u, ComplexMatrix(n, n)};
  for (int a = 0; a < n; ++a) {
    const ComplexMatrix rotated = u.adjoint() * (*basis)[a] * u;
    for (int g = 0; g < n; ++g) act.c(a, g) = ((*basis)[g].adjoint() * rotated).trace();
  }
  return act;
}

GksMatrix conjugate_gks(const GksMatrix& g, const AdjointAction& act) {
  if (act.c.rows() != g.matrix().rows()) {
    raise(ErrorCode::DimensionMismatch, "adjoint action does not match the GKS matrix");
  }
  return GksMatrix(g.basis_ptr(), act.c.transpose() * g.matrix() * act.c.conjugate());
}

Generator conjugate_generator(const Generator& g, const AdjointAction& act) {
  if (act.u.rows() != g.dim()) {
    raise(ErrorCode::DimensionMismatch, "adjoint action does not match the generator");
  }
  ComplexMatrix h = act.u.adjoint() * g.hamiltonian() * act.u;
  return Generator(0.5 * (h + h.adjoint()), conjugate_gks(g.gks(), act));
}

Superoperator conjugate_channel(const Superoperator& e, const ComplexMatrix& u) {
  require_unitary(u, e.dim());
  // vec(U X U^dagger) = (conj(U) kron U) vec(X)
  const ComplexMatrix before = kron(u.conjugate(), u);
  const ComplexMatrix after = kron(u.transpose(), u.adjoint());
  return Superoperator(e.dim(), after * e.matrix() * before);
}

const std::array<ComplexMatrix, 3>& so3_generators() {
  static const std::array<ComplexMatrix, 3> gens = [] {
    std::array<ComplexMatrix, 3> g;
    for (auto& m : g) m = ComplexMatrix::Zero(3, 3);
    g[0](1, 2) = kI;
    g[0](2, 1) = -kI;
    g[1](0, 2) = -kI;
    g[1](2, 0) = kI;
    g[2](0, 1) = kI;
    g[2](1, 0) = -kI;
    return g;
  }();
  return gens;
}

Rotation3 so3_rotation(const Vector3& axis, double angle) {
  if (!(std::abs(axis.norm() - 1.0) <= 1e-12)) {
    raise(ErrorCode::BadAxis, "rotation axis must be a unit vector");
  }
  const auto& g = so3_generators();
  const ComplexMatrix x = kI * angle * (axis(0) * g[0] + axis(1) * g[1] + axis(2) * g[2]);
  const Matrix3 r = expm(x).real();
  return Rotation3(r);
}

AxisAngle axis_angle(const Rotation3& rot) {
  const Matrix3& g = rot.matrix();
  const double c = std::clamp((g.trace() - 1.0) / 2.0, -1.0, 1.0);
  const Vector3 w(g(2, 1) - g(1, 2), g(0, 2) - g(2, 0), g(1, 0) - g(0, 1));
  const double s = 0.5 * w.norm();
  const double angle = std::atan2(s, c);
  if (s < 1e-300 && c > 0.0) return AxisAngle{Vector3::UnitZ(), 0.0};
  if (c >= 0.0) return AxisAngle{w.normalized(), angle};

  // Near pi the antisymmetric part vanishes; read the axis off the
  // symmetric part (1 - cos) n n^T and take the sign from w.
  const Matrix3 b = 0.5 * (g + g.transpose()) - c * Matrix3::Identity();
  Eigen::Index i = 0;
  b.diagonal().maxCoeff(&i);
  Vector3 n = b.col(i) / std::sqrt(b(i, i) * (1.0 - c));
  n.normalize();
  if (w.dot(n) < 0.0) n = -n;
  return AxisAngle{n, angle};
}

ComplexMatrix su2_from_rotation(const Rotation3& r) {
  const AxisAngle aa = axis_angle(r);
  ComplexMatrix ns(2, 2);
  ns << aa.axis(2), Complex(aa.axis(0), -aa.axis(1)), Complex(aa.axis(0), aa.axis(1)), -aa.axis(2);
  return std::cos(aa.angle / 2.0) * ComplexMatrix::Identity(2, 2) +
         kI * std::sin(aa.angle / 2.0) * ns;
}

}  // namespace qmarkov
