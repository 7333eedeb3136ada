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
#include <cstdint>
#include <vector>

#include "qmarkov/adjoint.hpp"
#include "qmarkov/lindblad.hpp"

namespace qmarkov {

using Vector3c = Eigen::Vector3cd;

/// abar(theta) = (cos theta, i sin theta, 0).
Vector3c canonical_vector(double theta);

/// Rank-one primitive abar(theta) abar(theta)^dagger in the Pauli basis.
GksMatrix primitive_gks(double theta);

/// Result of fixing the overall phase of a 3-vector so that its real and
/// imaginary parts are orthogonal with the real part no shorter:
/// aligned = e^{i psi} a, with k1 = |Re|^2 - |Im|^2 >= 0 and
/// k2 = 2 Re.Im = 0 evaluated on `aligned`.
struct PhaseAlignment {
  double psi;
  Vector3c aligned;
  double k1;
  double k2;
};

PhaseAlignment align_phase(const Vector3c& a);

/// A unit vector written as e^{i phase} rotation abar(theta), with
/// theta in [0, pi/4] and phase in (-pi/2, pi/2].
struct CanonicalPrimitive {
  double theta;
  Rotation3 rotation;
  double phase;

  Vector3c vector() const;
};

struct PrimitiveTerm {
  double weight;  // inverse time
  CanonicalPrimitive primitive;
};

/// a = sum_k weight_k v_k v_k^dagger with v_k = primitive_k.vector().
struct PrimitiveDecomposition {
  std::vector<PrimitiveTerm> terms;

  ComplexMatrix reconstruct() const;
};

/// Real PSD a = O diag(d) O^T, reassembled from three rotated copies of
/// unit-rate phase damping.
struct UnitalDecomposition {
  Rotation3 rotation;
  std::array<double, 3> weights;

  ComplexMatrix reconstruct() const;
};

UnitalDecomposition decompose_unital(const GksMatrix& a);

CanonicalPrimitive canonicalize_rank_one(const Vector3c& a, double tol = 1e-10);

PrimitiveDecomposition decompose_general(const GksMatrix& a);

/// Randomized falsification harness for the uniqueness of theta: samples
/// `trials` phases and rotations, re-canonicalizes e^{i psi} G abar(theta1)
/// and requires theta1 back (within 1e-10) and, when theta1 != theta2, a
/// distance to abar(theta2) above |theta1 - theta2| / 2.
bool verify_canonical_uniqueness(double theta1, double theta2, int trials, std::uint64_t seed);

/// weight * A(theta) conjugated by the SU(2) element realizing the term's
/// rotation; its GKS matrix equals weight * v v^dagger.
Generator realize_term(const PrimitiveTerm& term);

/// Rotated phase-damping generators (rate 2 d_k about axis O e_k) whose
/// sum has GKS matrix O diag(d) O^T.
std::vector<Generator> unital_term_generators(const UnitalDecomposition& d);

/// Uniformly distributed rotation (random unit quaternion).
class Rng;
Rotation3 random_rotation(Rng& rng);

}  // namespace qmarkov
