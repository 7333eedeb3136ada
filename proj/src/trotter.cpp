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

#include "qmarkov/trotter.hpp"

#include <cmath>
#include <string>

#include "qmarkov/channel.hpp"
#include "qmarkov/decomposer.hpp"
#include "qmarkov/error.hpp"

namespace qmarkov {

void TrotterPlan::validate() const {
  if (generators.empty()) raise(ErrorCode::InvalidArgument, "Trotter plan has no generators");
  if (steps < 1) raise(ErrorCode::InvalidArgument, "Trotter plan needs at least one step");
  if (!std::isfinite(total_time)) raise(ErrorCode::InvalidArgument, "Trotter time is not finite");
  if (total_time < 0.0) raise(ErrorCode::NegativeTime, "Trotter time is negative");
  const auto kind = generators.front().basis().kind();
  for (const auto& g : generators) {
    if (g.basis().kind() != kind) {
      raise(ErrorCode::BasisMismatch, "Trotter plan mixes operator bases");
    }
    if (!is_valid_gks(g.gks())) {
      raise(ErrorCode::NotPsd, "Trotter plan contains an invalid GKS matrix");
    }
  }
}

Superoperator trotter_evolve(const TrotterPlan& plan) {
  plan.validate();
  const int dim = plan.generators.front().dim();
  const double dt = plan.total_time / static_cast<double>(plan.steps);
  ComplexMatrix step = ComplexMatrix::Identity(dim * dim, dim * dim);
  for (const auto& g : plan.generators) step = step * exponentiate(g, dt).matrix();

  ComplexMatrix result = ComplexMatrix::Identity(dim * dim, dim * dim);
  ComplexMatrix base = step;
  for (std::size_t n = plan.steps; n > 0; n >>= 1) {
    if (n & 1U) result = result * base;
    if (n > 1) base = base * base;
  }
  return Superoperator(dim, std::move(result));
}

Generator sum_generators(std::span<const Generator> gs) {
  if (gs.empty()) raise(ErrorCode::InvalidArgument, "sum of an empty generator list");
  ComplexMatrix h = gs.front().hamiltonian();
  GksMatrix a = gs.front().gks();
  for (size_t i = 1; i < gs.size(); ++i) {
    if (gs[i].basis().kind() != a.basis().kind()) {
      raise(ErrorCode::BasisMismatch, "generators are expressed in different bases");
    }
    h += gs[i].hamiltonian();
    a = a + gs[i].gks();
  }
  return Generator(std::move(h), std::move(a));
}

std::vector<ConvergencePoint> convergence_profile(std::span<const Generator> gs,
                                                  double total_time,
                                                  std::span<const std::size_t> steps) {
  if (steps.size() < 3) {
    raise(ErrorCode::InvalidArgument, "convergence profile needs at least three step counts");
  }
  for (size_t i = 1; i < steps.size(); ++i) {
    if (steps[i] <= steps[i - 1]) {
      raise(ErrorCode::InvalidArgument, "step counts must be strictly ascending");
    }
  }
  const Superoperator exact = exponentiate(sum_generators(gs), total_time);
  TrotterPlan plan{std::vector<Generator>(gs.begin(), gs.end()), total_time, 1};
  std::vector<ConvergencePoint> out;
  for (std::size_t n : steps) {
    plan.steps = n;
    out.push_back(ConvergencePoint{n, distance(trotter_evolve(plan), exact)});
  }
  return out;
}

double loglog_slope(std::span<const ConvergencePoint> points) {
  if (points.size() < 2) raise(ErrorCode::InvalidArgument, "slope needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(points.size());
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.steps));
    const double y = std::log(p.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<Generator> primitive_split(const Generator& g) {
  std::vector<Generator> out;
  const int dim = g.dim();
  const ComplexMatrix& h = g.hamiltonian();
  const ComplexMatrix traceless =
      h - h.trace() / static_cast<double>(dim) * ComplexMatrix::Identity(dim, dim);
  if (traceless.norm() > 0.0) out.emplace_back(h, GksMatrix::zero(g.basis_ptr()));

  if (g.basis().kind() == BasisKind::Pauli) {
    for (const auto& term : decompose_general(g.gks()).terms) out.push_back(realize_term(term));
  } else {
    if (!is_valid_gks(g.gks())) raise(ErrorCode::NotPsd, "GKS matrix is not positive semidefinite");
    const HermitianEigen eig = eig_hermitian(g.gks().matrix());
    const double cutoff = 1e-12 * g.gks().matrix().norm();
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      if (eig.values(k) <= cutoff) continue;
      const ComplexVector v = eig.vectors.col(k);
      out.emplace_back(GksMatrix(g.basis_ptr(), eig.values(k) * v * v.adjoint()));
    }
  }
  if (out.empty()) out.emplace_back(GksMatrix::zero(g.basis_ptr()));
  return out;
}

}  // namespace qmarkov
