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

#include "qmarkov/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linear_fit.hpp"
#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

constexpr double kHamiltonianTolerance = 1e-12;

void require_same_basis(const GksMatrix& x, const GksMatrix& y) {
  if (x.basis().kind() != y.basis().kind()) {
    raise(ErrorCode::BasisMismatch, "GKS matrices are expressed in different bases");
  }
}

// sum_ab a_ab F_b^dagger F_a
ComplexMatrix dissipator_anchor(const GksMatrix& g) {
  const auto& basis = g.basis();
  const auto& a = g.matrix();
  ComplexMatrix k = ComplexMatrix::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j)
      if (a(i, j) != 0.0) k += a(i, j) * basis[j].adjoint() * basis[i];
  return k;
}

}  // namespace

GksMatrix::GksMatrix(BasisPtr basis, ComplexMatrix a) : basis_(std::move(basis)), a_(std::move(a)) {
  if (!basis_) raise(ErrorCode::InvalidArgument, "GKS matrix needs an operator basis");
  const int n = basis_->size();
  if (a_.rows() != n || a_.cols() != n) {
    raise(ErrorCode::DimensionMismatch,
          "GKS matrix must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
              std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()));
  }
  if (!all_finite(a_)) raise(ErrorCode::InvalidArgument, "GKS matrix has non-finite entries");
}

GksMatrix GksMatrix::zero(BasisPtr basis) {
  const int n = basis->size();
  return GksMatrix(std::move(basis), ComplexMatrix::Zero(n, n));
}

GksMatrix GksMatrix::symmetrized() const {
  return GksMatrix(basis_, 0.5 * (a_ + a_.adjoint()));
}

GksMatrix operator+(const GksMatrix& x, const GksMatrix& y) {
  require_same_basis(x, y);
  return GksMatrix(x.basis_ptr(), x.matrix() + y.matrix());
}

GksMatrix operator*(double s, const GksMatrix& x) {
  return GksMatrix(x.basis_ptr(), s * x.matrix());
}

Generator::Generator(GksMatrix gks)
    : h_(ComplexMatrix::Zero(gks.dim(), gks.dim())), gks_(std::move(gks)) {}

Generator::Generator(ComplexMatrix hamiltonian, GksMatrix gks)
    : h_(std::move(hamiltonian)), gks_(std::move(gks)) {
  if (h_.rows() != gks_.dim() || h_.cols() != gks_.dim()) {
    raise(ErrorCode::DimensionMismatch, "Hamiltonian does not match the GKS basis dimension");
  }
  if (!all_finite(h_)) raise(ErrorCode::InvalidArgument, "Hamiltonian has non-finite entries");
  if (hermiticity_defect(h_) > kHamiltonianTolerance * std::max(1.0, h_.norm())) {
    raise(ErrorCode::NotHermitian, "Hamiltonian is not Hermitian");
  }
  h_ = 0.5 * (h_ + h_.adjoint());
}

ComplexMatrix apply_generator(const Generator& g, const ComplexMatrix& rho) {
  const auto& basis = g.basis();
  if (rho.rows() != basis.dim() || rho.cols() != basis.dim()) {
    raise(ErrorCode::DimensionMismatch, "apply_generator: state does not match generator dimension");
  }
  const auto& a = g.gks().matrix();
  ComplexMatrix jump = ComplexMatrix::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.size(); ++i) {
    ComplexMatrix left = basis[i] * rho;
    for (int j = 0; j < basis.size(); ++j)
      if (a(i, j) != 0.0) jump += a(i, j) * left * basis[j].adjoint();
  }
  const ComplexMatrix k = dissipator_anchor(g.gks());
  return -kI * commutator(g.hamiltonian(), rho) + 2.0 * jump - k * rho - rho * k;
}

Superoperator as_superoperator(const Generator& g) {
  const auto& basis = g.basis();
  const int n = basis.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const auto& h = g.hamiltonian();
  const auto& a = g.gks().matrix();

  // vec(A X B) = (B^T kron A) vec(X)
  ComplexMatrix z = -kI * (kron(id, h) - kron(h.transpose(), id));
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j)
      if (a(i, j) != 0.0) z += 2.0 * a(i, j) * kron(basis[j].conjugate(), basis[i]);
  const ComplexMatrix k = dissipator_anchor(g.gks());
  z -= kron(id, k) + kron(k.transpose(), id);
  return Superoperator(n, std::move(z));
}

bool is_valid_gks(const GksMatrix& g, double tol) {
  const auto& a = g.matrix();
  if (hermiticity_defect(a) > tol * std::max(1.0, a.norm())) return false;
  return is_psd(a, tol);
}

RealVector unitality_residuals(const GksMatrix& g) {
  const auto& basis = g.basis();
  const auto& f = basis.f();
  const auto& a = g.matrix();
  const int n = basis.size();
  RealVector r = RealVector::Zero(n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) r(c) += a(i, j).imag() * f(i, j, c);
  return r;
}

RealVector identity_image(const GksMatrix& g) {
  const int dim = g.dim();
  const ComplexMatrix z = apply_generator(Generator(g), ComplexMatrix::Identity(dim, dim));
  const auto& basis = g.basis();
  RealVector out(basis.size());
  for (int c = 0; c < basis.size(); ++c) out(c) = (basis[c] * z).trace().real();
  return out;
}

bool is_unital(const GksMatrix& g, double tol) {
  const RealVector r = unitality_residuals(g);
  const RealVector z = identity_image(g);
  const double mismatch = (z + 4.0 * r).cwiseAbs().maxCoeff();
  if (mismatch > 1e-9 * (1.0 + g.matrix().norm())) {
    raise(ErrorCode::InternalInconsistency,
          "unitality criterion and Z(I) disagree by " + std::to_string(mismatch));
  }
  return r.cwiseAbs().maxCoeff() <= tol;
}

AffineRep to_affine(const Generator& g) {
  const auto& basis = g.basis();
  const int n = basis.size();
  const int dim = basis.dim();
  AffineRep rep{RealMatrix(n, n), RealVector(n)};
  for (int b = 0; b < n; ++b) {
    const ComplexMatrix zb = apply_generator(g, basis[b]);
    for (int a = 0; a < n; ++a) rep.l(a, b) = (basis[a] * zb).trace().real();
  }
  const ComplexMatrix zi = apply_generator(g, ComplexMatrix::Identity(dim, dim));
  for (int a = 0; a < n; ++a) {
    rep.p(a) = std::sqrt(2.0) / dim * (basis[a] * zi).trace().real();
  }
  return rep;
}

int parameter_count(const OperatorBasis& basis) {
  const int n = basis.size();
  return n * n + n;
}

Generator generator_from_parameters(const BasisPtr& basis, const RealVector& x) {
  const int n = basis->size();
  if (x.size() != parameter_count(*basis)) {
    raise(ErrorCode::DimensionMismatch, "parameter vector has the wrong length");
  }
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) a(i, i) = x(k++);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex v(x(k), x(k + 1));
      a(i, j) = v;
      a(j, i) = std::conj(v);
      k += 2;
    }
  }
  ComplexVector hc(n);
  for (int c = 0; c < n; ++c) hc(c) = x(k++);
  return Generator(combine(*basis, hc), GksMatrix(basis, std::move(a)));
}

AffineInversion from_affine(const AffineRep& rep, const BasisPtr& basis) {
  const int n = basis->size();
  if (rep.l.rows() != n || rep.l.cols() != n || rep.p.size() != n) {
    raise(ErrorCode::DimensionMismatch, "affine representation does not match the basis");
  }
  const auto fit = detail::solve(detail::affine_fit(*basis), detail::flatten(rep));
  if (!(fit.residual <= 1e-8)) {
    raise(ErrorCode::UnsolvableSystem,
          "affine map is outside the generator parameterization (residual " +
              std::to_string(fit.residual) + ")");
  }
  Generator g = generator_from_parameters(basis, fit.x);
  const bool psd = is_psd(g.gks().matrix(), kDefaultTolerance);
  return AffineInversion{std::move(g), psd, fit.residual};
}

namespace detail {

namespace {

template <typename Feature>
LinearFit build_fit(const BasisPtr& basis, Feature feature) {
  const int cols = parameter_count(*basis);
  RealMatrix design;
  for (int j = 0; j < cols; ++j) {
    RealVector x = RealVector::Zero(cols);
    x(j) = 1.0;
    const RealVector y = feature(generator_from_parameters(basis, x));
    if (j == 0) design.resize(y.size(), cols);
    design.col(j) = y;
  }
  LinearFit fit{design, Eigen::ColPivHouseholderQR<RealMatrix>(design)};
  return fit;
}

}  // namespace

RealVector flatten(const AffineRep& rep) {
  const auto n = rep.l.rows();
  RealVector y(n * n + n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) y(i * n + j) = rep.l(i, j);
  y.tail(n) = rep.p;
  return y;
}

RealVector flatten(const ComplexMatrix& m) {
  RealVector y(2 * m.size());
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    y(2 * k) = m(k).real();
    y(2 * k + 1) = m(k).imag();
  }
  return y;
}

const LinearFit& affine_fit(const OperatorBasis& basis) {
  auto feature = [](const Generator& g) { return flatten(to_affine(g)); };
  if (basis.kind() == BasisKind::Pauli) {
    static const LinearFit fit = build_fit(pauli_basis(), feature);
    return fit;
  }
  static const LinearFit fit = build_fit(gellmann_basis(), feature);
  return fit;
}

const LinearFit& superoperator_fit(const OperatorBasis& basis) {
  auto feature = [](const Generator& g) { return flatten(as_superoperator(g).matrix()); };
  if (basis.kind() == BasisKind::Pauli) {
    static const LinearFit fit = build_fit(pauli_basis(), feature);
    return fit;
  }
  static const LinearFit fit = build_fit(gellmann_basis(), feature);
  return fit;
}

FitResult solve(const LinearFit& fit, const RealVector& y) {
  if (y.size() != fit.design.rows()) {
    raise(ErrorCode::DimensionMismatch, "least-squares target has the wrong length");
  }
  RealVector x = fit.qr.solve(y);
  const double residual = (fit.design * x - y).norm();
  return FitResult{std::move(x), residual};
}

}  // namespace detail

}  // namespace qmarkov
