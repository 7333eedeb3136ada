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

#include "qmarkov/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linear_fit.hpp"
#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) raise(ErrorCode::NegativeTime, "time must be nonnegative, got " + std::to_string(t));
}

void require_rate(double rate) {
  if (!(rate >= 0.0)) raise(ErrorCode::NegativeRate, "rate must be nonnegative, got " + std::to_string(rate));
}

// Vectorized qubit indices: rho00 -> 0, rho10 -> 1, rho01 -> 2, rho11 -> 3.
constexpr int k00 = 0, k10 = 1, k01 = 2, k11 = 3;

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  require_square(rho_, "density matrix");
  if (!all_finite(rho_)) raise(ErrorCode::InvalidArgument, "density matrix has non-finite entries");
  if (hermiticity_defect(rho_) > 1e-12 * std::max(1.0, rho_.norm())) {
    raise(ErrorCode::NotHermitian, "density matrix is not Hermitian");
  }
  rho_ = 0.5 * (rho_ + rho_.adjoint());
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) {
    raise(ErrorCode::InvalidArgument, "density matrix trace is " + std::to_string(tr) + ", not 1");
  }
  if (!is_psd(rho_, 1e-10)) raise(ErrorCode::NotPsd, "density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::from_bloch(const OperatorBasis& basis, const RealVector& r) {
  return DensityMatrix(qmarkov::from_bloch(basis, r));
}

Superoperator exponentiate(const Generator& g, double t) {
  require_time(t);
  const Superoperator z = as_superoperator(g);
  return Superoperator(g.dim(), expm(t * z.matrix()));
}

Superoperator phase_damping(double gamma, double t) {
  require_rate(gamma);
  require_time(t);
  const double e = std::exp(-gamma * t);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(k00, k00) = 1.0;
  m(k11, k11) = 1.0;
  m(k10, k10) = e;
  m(k01, k01) = e;
  return Superoperator(2, std::move(m));
}

Superoperator depolarizing(double gamma_tilde, double t) {
  require_rate(gamma_tilde);
  require_time(t);
  const double e = std::exp(-gamma_tilde * t);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  // rho00' = (tr rho + e (rho00 - rho11)) / 2
  m(k00, k00) = 0.5 * (1.0 + e);
  m(k00, k11) = 0.5 * (1.0 - e);
  m(k11, k00) = 0.5 * (1.0 - e);
  m(k11, k11) = 0.5 * (1.0 + e);
  m(k10, k10) = e;
  m(k01, k01) = e;
  return Superoperator(2, std::move(m));
}

Superoperator amplitude_damping(double gamma, double t) {
  require_rate(gamma);
  require_time(t);
  const double e = std::exp(-gamma * t);
  const double half = std::exp(-0.5 * gamma * t);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(k00, k00) = 1.0;
  m(k00, k11) = 1.0 - e;
  m(k11, k11) = e;
  m(k10, k10) = half;
  m(k01, k01) = half;
  return Superoperator(2, std::move(m));
}

GksMatrix phase_damping_gks(double gamma) {
  require_rate(gamma);
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(2, 2) = gamma / 2.0;
  return GksMatrix(pauli_basis(), std::move(a));
}

GksMatrix depolarizing_gks(double gamma_tilde) {
  require_rate(gamma_tilde);
  return GksMatrix(pauli_basis(), ComplexMatrix::Identity(3, 3) * (gamma_tilde / 4.0));
}

GksMatrix amplitude_damping_gks(double gamma) {
  require_rate(gamma);
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(0, 1) = -kI;
  a(1, 0) = kI;
  a(1, 1) = 1.0;
  return GksMatrix(pauli_basis(), (gamma / 4.0) * a);
}

Generator extract_generator(std::span<const Snapshot> snapshots, const BasisPtr& basis) {
  if (snapshots.size() < 2) {
    raise(ErrorCode::InvalidArgument, "extract_generator needs at least two snapshots");
  }
  const int dim = basis->dim();
  const Eigen::Index d2 = dim * dim;
  std::vector<double> ts;
  std::vector<ComplexMatrix> table;
  for (const auto& s : snapshots) {
    if (s.channel.dim() != dim) {
      raise(ErrorCode::DimensionMismatch, "snapshot dimension does not match the basis");
    }
    if (!(s.t > 0.0)) raise(ErrorCode::InvalidArgument, "snapshot times must be positive");
    for (double other : ts) {
      if (other == s.t) raise(ErrorCode::InvalidArgument, "snapshot times must be distinct");
    }
    ts.push_back(s.t);
    table.push_back((s.channel.matrix() - ComplexMatrix::Identity(d2, d2)) / s.t);
  }

  // Neville's scheme evaluated at t = 0.
  const size_t k = ts.size();
  for (size_t level = 1; level < k; ++level) {
    for (size_t i = 0; i + level < k; ++i) {
      const double ti = ts[i];
      const double tj = ts[i + level];
      table[i] = (tj * table[i] - ti * table[i + 1]) / (tj - ti);
    }
  }
  const ComplexMatrix& z = table.front();

  const auto fit = detail::solve(detail::superoperator_fit(*basis), detail::flatten(z));
  if (!(fit.residual <= 1e-6)) {
    raise(ErrorCode::FitResidualTooLarge,
          "snapshots are not generated by a GKS generator (residual " +
              std::to_string(fit.residual) + ")");
  }
  return generator_from_parameters(basis, fit.x);
}

std::vector<DensityMatrix> evolve(const Generator& g, const DensityMatrix& rho0,
                                  std::span<const double> times) {
  if (rho0.dim() != g.dim()) {
    raise(ErrorCode::DimensionMismatch, "initial state does not match the generator dimension");
  }
  for (size_t i = 0; i < times.size(); ++i) {
    require_time(times[i]);
    if (i > 0 && times[i] < times[i - 1]) {
      raise(ErrorCode::InvalidArgument, "evolve: times must be ascending");
    }
  }
  const ComplexMatrix z = as_superoperator(g).matrix();
  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  for (double t : times) {
    const ComplexMatrix rho = unvec(expm(t * z) * vec(rho0.matrix()), g.dim());
    out.emplace_back(0.5 * (rho + rho.adjoint()));
  }
  return out;
}

}  // namespace qmarkov
