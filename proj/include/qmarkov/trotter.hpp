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

#include <cstddef>
#include <span>
#include <vector>

#include "qmarkov/lindblad.hpp"
#include "qmarkov/superoperator.hpp"

namespace qmarkov {

struct TrotterPlan {
  std::vector<Generator> generators;
  double total_time = 0.0;
  std::size_t steps = 1;

  /// Nonempty, common basis, finite nonnegative time, at least one step,
  /// every GKS matrix valid.
  void validate() const;
};

/// (E^1_{t/n} E^2_{t/n} ... E^k_{t/n})^n, factors multiplied left to right
/// in list order (so the last generator acts first within a step). The k
/// factor exponentials are computed once and the step is raised to the
/// n-th power by repeated squaring.
Superoperator trotter_evolve(const TrotterPlan& plan);

/// Hamiltonians and GKS matrices added entrywise.
Generator sum_generators(std::span<const Generator> gs);

struct ConvergencePoint {
  std::size_t steps;
  double error;  // Frobenius distance to exponentiate(sum, t)
};

std::vector<ConvergencePoint> convergence_profile(std::span<const Generator> gs,
                                                  double total_time,
                                                  std::span<const std::size_t> steps);

/// Least-squares slope of log(error) against log(steps).
double loglog_slope(std::span<const ConvergencePoint> points);

/// Splits a generator into independently simulable pieces whose sum is the
/// original: a Hamiltonian-only term (when H != 0) followed by the realized
/// primitive terms. Qubits use the canonical primitive decomposition; other
/// dimensions use the spectral rank-one terms of the GKS matrix.
std::vector<Generator> primitive_split(const Generator& g);

}  // namespace qmarkov
