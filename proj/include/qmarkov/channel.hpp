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

#include <span>
#include <vector>

#include "qmarkov/lindblad.hpp"
#include "qmarkov/superoperator.hpp"

namespace qmarkov {

/// Hermitian, unit-trace, positive semidefinite N x N matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  static DensityMatrix from_bloch(const OperatorBasis& basis, const RealVector& r);

  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

 private:
  ComplexMatrix rho_;
};

/// E_t = exp(t Z). Throws NegativeTime for t < 0.
Superoperator exponentiate(const Generator& g, double t);

// Closed-form qubit channels, built entry by entry from their matrix
// elements rather than by exponentiation.
Superoperator phase_damping(double gamma, double t);
Superoperator depolarizing(double gamma_tilde, double t);
Superoperator amplitude_damping(double gamma, double t);

// GKS matrices of the same channels in the normalized Pauli basis.
GksMatrix phase_damping_gks(double gamma);
GksMatrix depolarizing_gks(double gamma_tilde);
GksMatrix amplitude_damping_gks(double gamma);

struct Snapshot {
  double t;
  Superoperator channel;
};

/// Estimate the generator of a semigroup from channels sampled at small
/// distinct times: (E_t - I)/t is extrapolated to t = 0 through all
/// snapshots (Neville), then fitted to the GKS form by least squares.
/// Throws FitResidualTooLarge when the fit residual exceeds 1e-6.
Generator extract_generator(std::span<const Snapshot> snapshots, const BasisPtr& basis);

/// rho(t_i) = exponentiate(g, t_i)(rho0), each from a fresh exponential.
std::vector<DensityMatrix> evolve(const Generator& g, const DensityMatrix& rho0,
                                  std::span<const double> times);

}  // namespace qmarkov
