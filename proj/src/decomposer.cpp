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

#include "qmarkov/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmarkov/channel.hpp"
#include "qmarkov/error.hpp"
#include "qmarkov/random.hpp"

namespace qmarkov {

namespace {

constexpr double kPi = std::numbers::pi;

void require_qubit(const GksMatrix& a) {
  if (a.basis().kind() != BasisKind::Pauli || a.matrix().rows() != 3) {
    raise(ErrorCode::DimensionMismatch, "qubit decompositions need a 3x3 GKS matrix in the Pauli basis");
  }
}

Matrix3 rotation_onto_x(const Vector3& e1) {
  const Vector3 x = Vector3::UnitX();
  const Vector3 cross = e1.cross(x);
  const double s = cross.norm();
  const double c = e1.dot(x);
  if (s < 1e-15) {
    if (c > 0.0) return Matrix3::Identity();
    return Eigen::AngleAxisd(kPi, Vector3::UnitZ()).toRotationMatrix();
  }
  return Eigen::AngleAxisd(std::atan2(s, c), cross / s).toRotationMatrix();
}

// Weighted outer-product sum of a primitive about z rotated by `r`.
ComplexMatrix rotated_phase_damping(const Rotation3& r, double gamma) {
  const ComplexMatrix pd = phase_damping_gks(gamma).matrix();
  const ComplexMatrix g = r.matrix().cast<Complex>();
  return g * pd * g.transpose();
}

}  // namespace

Vector3c canonical_vector(double theta) {
  return Vector3c(std::cos(theta), kI * std::sin(theta), 0.0);
}

GksMatrix primitive_gks(double theta) {
  const Vector3c v = canonical_vector(theta);
  return GksMatrix(pauli_basis(), v * v.adjoint());
}

PhaseAlignment align_phase(const Vector3c& a) {
  const Vector3 re = a.real();
  const Vector3 im = a.imag();
  const double k1 = re.squaredNorm() - im.squaredNorm();
  const double k2 = 2.0 * re.dot(im);
  // k1 = k2 = 0 gives psi = 0.
  double psi = -0.5 * std::atan2(k2, k1);
  if (psi <= -kPi / 2.0) psi += kPi;
  PhaseAlignment out;
  out.psi = psi;
  out.aligned = std::exp(kI * psi) * a;
  const Vector3 re2 = out.aligned.real();
  const Vector3 im2 = out.aligned.imag();
  out.k1 = re2.squaredNorm() - im2.squaredNorm();
  out.k2 = 2.0 * re2.dot(im2);
  return out;
}

Vector3c CanonicalPrimitive::vector() const {
  return std::exp(kI * phase) * (rotation.matrix().cast<Complex>() * canonical_vector(theta));
}

ComplexMatrix PrimitiveDecomposition::reconstruct() const {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  for (const auto& term : terms) {
    const Vector3c v = term.primitive.vector();
    a += term.weight * v * v.adjoint();
  }
  return a;
}

ComplexMatrix UnitalDecomposition::reconstruct() const {
  // A = (2/gamma) (d1 O R_y A_pd R_y^T O^T + d2 O R_x A_pd R_x^T O^T + d3 O A_pd O^T)
  // with R_y = exp(i pi/2 G_2), R_x = exp(i pi/2 G_1) and unit-rate A_pd.
  const double gamma = 1.0;
  const Rotation3 ry = so3_rotation(Vector3::UnitY(), kPi / 2.0);
  const Rotation3 rx = so3_rotation(Vector3::UnitX(), kPi / 2.0);
  return (2.0 / gamma) * (weights[0] * rotated_phase_damping(rotation * ry, gamma) +
                          weights[1] * rotated_phase_damping(rotation * rx, gamma) +
                          weights[2] * rotated_phase_damping(rotation, gamma));
}

UnitalDecomposition decompose_unital(const GksMatrix& a) {
  require_qubit(a);
  const ComplexMatrix& m = a.matrix();
  const double scale = std::max(1.0, m.norm());
  if (m.imag().norm() > 1e-10 * scale) {
    raise(ErrorCode::NotReal, "unital decomposition needs a real GKS matrix");
  }
  if (!is_valid_gks(a)) raise(ErrorCode::NotPsd, "GKS matrix is not positive semidefinite");

  const Matrix3 sym = 0.5 * (m.real() + m.real().transpose());
  const Matrix3 off = sym - Matrix3(sym.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() <= 1e-15 * scale) {
    return UnitalDecomposition{Rotation3(), {std::max(0.0, sym(0, 0)), std::max(0.0, sym(1, 1)),
                                             std::max(0.0, sym(2, 2))}};
  }
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(sym);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::ConvergenceFailure, "eigensolver did not converge");
  }
  Matrix3 o;
  std::array<double, 3> d{};
  for (int k = 0; k < 3; ++k) {
    o.col(k) = solver.eigenvectors().col(2 - k);
    d[static_cast<size_t>(k)] = std::max(0.0, solver.eigenvalues()(2 - k));
  }
  if (o.determinant() < 0.0) o.col(2) = -o.col(2);
  return UnitalDecomposition{Rotation3(o), d};
}

CanonicalPrimitive canonicalize_rank_one(const Vector3c& a, double tol) {
  const double norm = a.norm();
  if (!(std::abs(norm - 1.0) <= tol)) {
    raise(ErrorCode::NotNormalized, "vector norm is " + std::to_string(norm) + ", expected 1");
  }
  const PhaseAlignment ph = align_phase(a);
  const Vector3 re = ph.aligned.real();
  const Vector3 im = ph.aligned.imag();
  const double n_re = re.norm();
  const Vector3 e1 = re / n_re;
  Vector3 im_perp = im - im.dot(e1) * e1;
  const double n_im = im_perp.norm();

  Matrix3 align;
  if (n_im > 1e-13) {
    const Vector3 e2 = im_perp / n_im;
    align.row(0) = e1.transpose();
    align.row(1) = e2.transpose();
    align.row(2) = e1.cross(e2).transpose();
  } else {
    align = rotation_onto_x(e1);
  }

  CanonicalPrimitive out{std::atan2(n_im, n_re), Rotation3(align.transpose()), -ph.psi};
  if (out.phase < -kPi / 2.0 + 1e-15) {
    // e^{-i pi/2} = -e^{i pi/2}, and R_z(pi) abar(theta) = -abar(theta).
    out.phase += kPi;
    out.rotation = out.rotation * so3_rotation(Vector3::UnitZ(), kPi);
  }
  return out;
}

PrimitiveDecomposition decompose_general(const GksMatrix& a) {
  require_qubit(a);
  if (!is_valid_gks(a)) raise(ErrorCode::NotPsd, "GKS matrix is not positive semidefinite");
  const HermitianEigen eig = eig_hermitian(a.matrix());
  const double cutoff = 1e-12 * a.matrix().norm();
  PrimitiveDecomposition out;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= cutoff) continue;
    const Vector3c v = eig.vectors.col(k);
    out.terms.push_back(PrimitiveTerm{eig.values(k), canonicalize_rank_one(v.normalized())});
  }
  return out;
}

Rotation3 random_rotation(Rng& rng) {
  Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  q.normalize();
  return Rotation3(q.toRotationMatrix());
}

bool verify_canonical_uniqueness(double theta1, double theta2, int trials, std::uint64_t seed) {
  Rng rng(seed);
  const bool distinct = std::abs(theta1 - theta2) > 1e-12;
  const double bound = std::abs(theta1 - theta2) / 2.0;
  for (int i = 0; i < trials; ++i) {
    const double psi = rng.uniform(-kPi / 2.0, kPi / 2.0);
    const Rotation3 g = random_rotation(rng);
    const Vector3c v = std::exp(kI * psi) * (g.matrix().cast<Complex>() * canonical_vector(theta1));
    const CanonicalPrimitive c = canonicalize_rank_one(v);
    if (!(std::abs(c.theta - theta1) <= 1e-10)) return false;
    if (distinct && !((canonical_vector(c.theta) - canonical_vector(theta2)).norm() > bound)) {
      return false;
    }
  }
  return true;
}

Generator realize_term(const PrimitiveTerm& term) {
  const AdjointAction act = adjoint_of(su2_from_rotation(term.primitive.rotation), pauli_basis());
  return Generator(conjugate_gks(term.weight * primitive_gks(term.primitive.theta), act));
}

std::vector<Generator> unital_term_generators(const UnitalDecomposition& d) {
  const Rotation3 ry = so3_rotation(Vector3::UnitY(), kPi / 2.0);
  const Rotation3 rx = so3_rotation(Vector3::UnitX(), kPi / 2.0);
  const std::array<Rotation3, 3> axes{d.rotation * ry, d.rotation * rx, d.rotation};
  std::vector<Generator> out;
  for (size_t k = 0; k < 3; ++k) {
    const AdjointAction act = adjoint_of(su2_from_rotation(axes[k]), pauli_basis());
    out.emplace_back(conjugate_gks(phase_damping_gks(2.0 * d.weights[k]), act));
  }
  return out;
}

}  // namespace qmarkov
