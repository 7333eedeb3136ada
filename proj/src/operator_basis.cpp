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

#include "qmarkov/operator_basis.hpp"

#include <cmath>
#include <string>

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

ComplexMatrix unit(int n, int i, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

std::string_view to_string(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::Pauli: return "pauli";
    case BasisKind::GellMann: return "gellmann";
  }
  return "unknown";
}

BasisKind basis_kind_from_string(std::string_view name) {
  if (name == "pauli") return BasisKind::Pauli;
  if (name == "gellmann") return BasisKind::GellMann;
  raise(ErrorCode::InvalidArgument, "unknown basis '" + std::string(name) + "'");
}

OperatorBasis::OperatorBasis(BasisKind kind, std::vector<ComplexMatrix> elements)
    : kind_(kind), dim_(0), elements_(std::move(elements)) {
  if (elements_.empty()) raise(ErrorCode::InvalidArgument, "empty operator basis");
  dim_ = static_cast<int>(elements_.front().rows());
  const int n = size();
  if (n != dim_ * dim_ - 1) {
    raise(ErrorCode::DimensionMismatch, "operator basis must have N^2 - 1 elements");
  }
  for (const auto& e : elements_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      raise(ErrorCode::DimensionMismatch, "operator basis elements differ in size");
    }
  }

  f_ = Tensor3(n);
  h_ = Tensor3(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const ComplexMatrix comm = commutator(elements_[a], elements_[b]);
      const ComplexMatrix anti = anticommutator(elements_[a], elements_[b]);
      for (int c = 0; c < n; ++c) {
        // F_c is Hermitian, so tr(X F_c^dagger) = tr(X F_c).
        f_(a, b, c) = (-kI * (comm * elements_[c]).trace()).real();
        h_(a, b, c) = (anti * elements_[c]).trace().real();
      }
    }
  }
}

BasisPtr pauli_basis() {
  static const BasisPtr basis = [] {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    z << 1, 0, 0, -1;
    return std::make_shared<const OperatorBasis>(
        BasisKind::Pauli, std::vector<ComplexMatrix>{s * x, s * y, s * z});
  }();
  return basis;
}

BasisPtr gellmann_basis() {
  static const BasisPtr basis = [] {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    std::vector<ComplexMatrix> el;
    el.push_back(s2 * (unit(3, 0, 1) + unit(3, 1, 0)));
    el.push_back(s2 * (-kI * unit(3, 0, 1) + kI * unit(3, 1, 0)));
    el.push_back(s2 * (unit(3, 0, 0) - unit(3, 1, 1)));
    el.push_back(s2 * (unit(3, 0, 2) + unit(3, 2, 0)));
    el.push_back(s2 * (-kI * unit(3, 0, 2) + kI * unit(3, 2, 0)));
    el.push_back(s2 * (unit(3, 1, 2) + unit(3, 2, 1)));
    el.push_back(s2 * (-kI * unit(3, 1, 2) + kI * unit(3, 2, 1)));
    el.push_back(s6 * (unit(3, 0, 0) + unit(3, 1, 1) - 2.0 * unit(3, 2, 2)));
    return std::make_shared<const OperatorBasis>(BasisKind::GellMann, std::move(el));
  }();
  return basis;
}

BasisPtr basis_for(BasisKind kind) {
  return kind == BasisKind::Pauli ? pauli_basis() : gellmann_basis();
}

BasisPtr basis_for_dim(int dim) {
  if (dim == 2) return pauli_basis();
  if (dim == 3) return gellmann_basis();
  raise(ErrorCode::InvalidArgument,
        "no operator basis for Hilbert dimension " + std::to_string(dim));
}

Expansion expand(const OperatorBasis& basis, const ComplexMatrix& m) {
  if (m.rows() != basis.dim() || m.cols() != basis.dim()) {
    raise(ErrorCode::DimensionMismatch, "expand: matrix does not match basis dimension");
  }
  Expansion e;
  e.identity = m.trace() / static_cast<double>(basis.dim());
  e.coeffs.resize(basis.size());
  for (int a = 0; a < basis.size(); ++a) {
    e.coeffs(a) = (basis[a].adjoint() * m).trace();
  }
  return e;
}

ComplexMatrix combine(const OperatorBasis& basis, const ComplexVector& coeffs) {
  if (coeffs.size() != basis.size()) {
    raise(ErrorCode::DimensionMismatch, "combine: coefficient count does not match basis");
  }
  ComplexMatrix m = ComplexMatrix::Zero(basis.dim(), basis.dim());
  for (int a = 0; a < basis.size(); ++a) m += coeffs(a) * basis[a];
  return m;
}

ComplexMatrix reconstruct(const OperatorBasis& basis, const Expansion& e) {
  return e.identity * ComplexMatrix::Identity(basis.dim(), basis.dim()) +
         combine(basis, e.coeffs);
}

RealVector bloch_vector(const OperatorBasis& basis, const ComplexMatrix& rho) {
  const Expansion e = expand(basis, rho);
  return std::sqrt(2.0) * e.coeffs.real();
}

ComplexMatrix from_bloch(const OperatorBasis& basis, const RealVector& r) {
  if (r.size() != basis.size()) {
    raise(ErrorCode::DimensionMismatch, "from_bloch: Bloch vector length does not match basis");
  }
  const int n = basis.dim();
  return ComplexMatrix::Identity(n, n) / static_cast<double>(n) +
         combine(basis, r.cast<Complex>() / std::sqrt(2.0));
}

}  // namespace qmarkov
