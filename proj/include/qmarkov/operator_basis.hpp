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

#include <memory>
#include <string_view>
#include <vector>

#include "qmarkov/matrix_kernel.hpp"

namespace qmarkov {

enum class BasisKind { Pauli, GellMann };

std::string_view to_string(BasisKind kind) noexcept;
BasisKind basis_kind_from_string(std::string_view name);

/// Dense rank-3 array of reals indexed (a, b, c), each index in [0, n).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<size_t>(n) * n * n, 0.0) {}

  int extent() const noexcept { return n_; }
  double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

 private:
  size_t index(int a, int b, int c) const {
    return (static_cast<size_t>(a) * n_ + b) * n_ + c;
  }
  int n_ = 0;
  std::vector<double> data_;
};

/// Hermitian, traceless, trace-orthonormal operators F_1..F_{N^2-1} with
///   [F_a, F_b] = i f_abc F_c
///   {F_a, F_b} - (2/N) delta_ab I = h_abc F_c
/// The structure constants are computed from the elements by trace
/// formulas, never tabulated.
class OperatorBasis {
 public:
  OperatorBasis(BasisKind kind, std::vector<ComplexMatrix> elements);

  BasisKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  /// Number of elements, N^2 - 1.
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const ComplexMatrix& operator[](int a) const { return elements_[static_cast<size_t>(a)]; }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }

  const Tensor3& f() const noexcept { return f_; }
  const Tensor3& h() const noexcept { return h_; }

 private:
  BasisKind kind_;
  int dim_;
  std::vector<ComplexMatrix> elements_;
  Tensor3 f_;
  Tensor3 h_;
};

using BasisPtr = std::shared_ptr<const OperatorBasis>;

/// Normalized Pauli operators sigma_{x,y,z} / sqrt(2).
BasisPtr pauli_basis();
/// Gell-Mann matrices lambda_k / sqrt(2), so that tr(F_a F_b) = delta_ab.
BasisPtr gellmann_basis();
BasisPtr basis_for(BasisKind kind);
/// Basis for Hilbert dimension 2 or 3.
BasisPtr basis_for_dim(int dim);

struct Expansion {
  Complex identity;       // c_0 = tr(m) / N
  ComplexVector coeffs;   // c_a = tr(F_a^dagger m)
};

/// m = c_0 I + sum_a c_a F_a.
Expansion expand(const OperatorBasis& basis, const ComplexMatrix& m);
ComplexMatrix reconstruct(const OperatorBasis& basis, const Expansion& e);
ComplexMatrix combine(const OperatorBasis& basis, const ComplexVector& coeffs);

/// Generalized Bloch coordinates r_a = sqrt(2) tr(F_a rho). For the qubit
/// these are the usual (x, y, z) with rho = (I + r.sigma) / 2.
RealVector bloch_vector(const OperatorBasis& basis, const ComplexMatrix& rho);
/// Unit-trace operator I/N + sum_a r_a F_a / sqrt(2).
ComplexMatrix from_bloch(const OperatorBasis& basis, const RealVector& r);

}  // namespace qmarkov
