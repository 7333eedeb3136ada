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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qmarkov/channel.hpp"
#include "qmarkov/error.hpp"
#include "support.hpp"

using namespace qmarkov;
using namespace qmarkov::testing;

namespace {

Generator qubit(const ComplexMatrix& a) { return Generator(GksMatrix(pauli_basis(), a)); }

ComplexMatrix pd(double gamma) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(2, 2) = gamma / 2.0;
  return a;
}

ComplexMatrix dep(double gamma) { return gamma / 4.0 * ComplexMatrix::Identity(3, 3); }

ComplexMatrix ad(double gamma) {
  ComplexMatrix a(3, 3);
  a << 1, Complex(0, -1), 0, Complex(0, 1), 1, 0, 0, 0, 0;
  return gamma / 4.0 * a;
}

ComplexMatrix state(Complex r00, Complex r01, Complex r11) {
  ComplexMatrix rho(2, 2);
  rho << r00, r01, std::conj(r01), r11;
  return rho;
}

Generator random_generator(Rng& rng, const BasisPtr& b) {
  ComplexMatrix h = random_hermitian(rng, b->dim());
  return Generator(h, GksMatrix(b, random_psd(rng, b->size(), rng.uniform(0.1, 2.0))));
}

}  // namespace

TEST_CASE("Superoperator basics") {
  const Superoperator id = Superoperator::identity(2);
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 1.0;
  CHECK((id.choi() - want).norm() == 0.0);
  CHECK(id.is_trace_preserving());
  CHECK(id.is_completely_positive());

  // Transposition is positive and trace preserving but not completely positive.
  const Superoperator transpose(2, superop_from_action(2, [](const ComplexMatrix& x) {
                                  return ComplexMatrix(x.transpose());
                                }));
  CHECK(transpose.is_trace_preserving());
  CHECK_FALSE(transpose.is_completely_positive());

  CHECK_THROWS_AS(Superoperator(2, ComplexMatrix::Zero(3, 3)), Error);
  CHECK_THROWS_AS(compose(id, Superoperator::identity(3)), Error);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(DensityMatrix(state(0.5, 0.5, 0.5)));
  CHECK_THROWS_AS(DensityMatrix(state(0.6, 0.0, 0.6)), Error);
  CHECK_THROWS_AS(DensityMatrix(state(1.2, 0.0, -0.2)), Error);
  ComplexMatrix skew(2, 2);
  skew << 0.5, 0.1, 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix{skew}, Error);
  CHECK((DensityMatrix::from_bloch(*pauli_basis(), Eigen::Vector3d(0, 0, -1)).matrix() - state(0, 0, 1)).norm() <
        1e-15);
}

TEST_CASE("exponentiate examples") {
  const Superoperator e0 = exponentiate(qubit(ad(1.3)), 0.0);
  CHECK((e0.matrix() - ComplexMatrix::Identity(4, 4)).norm() == 0.0);

  const ComplexMatrix rho = state(0.3, Complex(0.2, -0.1), 0.7);
  const ComplexMatrix out = exponentiate(qubit(pd(2.0)), 0.5).apply(rho);
  CHECK(std::abs(out(0, 1) - std::exp(-1.0) * rho(0, 1)) < 1e-15);
  CHECK(std::abs(out(1, 0) - std::exp(-1.0) * rho(1, 0)) < 1e-15);
  CHECK(std::abs(out(0, 0) - rho(0, 0)) < 1e-15);

  // rho00 + (1 - e^{-Gt}) rho11, e^{-Gt/2} rho01, e^{-Gt} rho11.
  const double e = std::exp(-1.0);
  const ComplexMatrix a = exponentiate(qubit(ad(1.0)), 1.0).apply(rho);
  const ComplexMatrix want = state(rho(0, 0) + (1.0 - e) * rho(1, 1), std::sqrt(e) * rho(0, 1), e * rho(1, 1));
  CHECK((a - want).norm() < 1e-10);

  CHECK_THROWS_AS(exponentiate(qubit(pd(1.0)), -0.1), Error);
}

TEST_CASE("closed-form channels") {
  const ComplexMatrix rho = state(0.25, Complex(0.1, 0.3), 0.75);
  const ComplexMatrix mixed = depolarizing(1.0, 60.0).apply(rho);
  CHECK((mixed - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-15);

  const double g = 0.8, t = 1.1;
  const ComplexMatrix excited = amplitude_damping(g, t).apply(state(0, 0, 1));
  CHECK((excited - state(1.0 - std::exp(-g * t), 0, std::exp(-g * t))).norm() < 1e-15);

  CHECK(distance(compose(phase_damping(g, t), phase_damping(g, t)), phase_damping(g, 2 * t)) < 1e-15);
  CHECK(distance(compose(Superoperator::identity(2), amplitude_damping(g, t)), amplitude_damping(g, t)) == 0.0);
  CHECK(distance(compose(phase_damping(g, 0.3), phase_damping(g, 0.9)), phase_damping(g, 1.2)) < 1e-12);
  CHECK(distance(compose(amplitude_damping(g, 0.3), amplitude_damping(g, 0.9)), amplitude_damping(g, 1.2)) < 1e-10);

  CHECK_THROWS_AS(phase_damping(-1.0, 1.0), Error);
  CHECK_THROWS_AS(amplitude_damping(1.0, -1.0), Error);
}

TEST_CASE("closed-form channels equal exponentiated generators") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const double rate = rng.uniform(0.0, 2.0);
    const double t = rng.uniform(0.0, 2.0);
    CHECK(distance(exponentiate(qubit(pd(rate)), t), phase_damping(rate, t)) < 1e-10);
    CHECK(distance(exponentiate(qubit(dep(rate)), t), depolarizing(rate, t)) < 1e-10);
    CHECK(distance(exponentiate(qubit(ad(rate)), t), amplitude_damping(rate, t)) < 1e-10);
    CHECK((phase_damping_gks(rate).matrix() - pd(rate)).norm() == 0.0);
    CHECK((depolarizing_gks(rate).matrix() - dep(rate)).norm() == 0.0);
    CHECK((amplitude_damping_gks(rate).matrix() - ad(rate)).norm() < 1e-16);
  }
}

TEST_CASE("semigroup law and physicality of exponentiated generators") {
  Rng rng(42);
  for (const auto& b : {pauli_basis(), gellmann_basis()}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Generator g = random_generator(rng, b);
      const double s = rng.uniform(0.0, 2.5);
      const double t = rng.uniform(0.0, 2.5);
      const Superoperator es = exponentiate(g, s);
      const Superoperator et = exponentiate(g, t);
      CHECK(distance(compose(es, et), exponentiate(g, s + t)) < 1e-10);
      CHECK(es.is_trace_preserving(1e-10));
      CHECK(es.is_completely_positive(1e-9));
    }
  }
}

TEST_CASE("extract_generator examples") {
  const std::vector<Snapshot> pd_snaps{{1e-3, phase_damping(1.0, 1e-3)}, {5e-4, phase_damping(1.0, 5e-4)}};
  const Generator gpd = extract_generator(pd_snaps, pauli_basis());
  CHECK((gpd.gks().matrix() - pd(1.0)).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(std::abs(gpd.gks().matrix()(2, 2) - 0.5) < 1e-6);

  const std::vector<Snapshot> dep_snaps{{1e-3, depolarizing(1.0, 1e-3)}, {5e-4, depolarizing(1.0, 5e-4)}};
  const Generator gdep = extract_generator(dep_snaps, pauli_basis());
  CHECK((gdep.gks().matrix() - dep(1.0)).cwiseAbs().maxCoeff() < 1e-6);

  const std::vector<Snapshot> id_snaps{{0.1, Superoperator::identity(2)}, {0.2, Superoperator::identity(2)}};
  const Generator gid = extract_generator(id_snaps, pauli_basis());
  CHECK(gid.gks().matrix().norm() < 1e-12);
  CHECK(gid.hamiltonian().norm() < 1e-12);
}

TEST_CASE("extract_generator inverts exponentiate") {
  Rng rng(43);
  for (const auto& b : {pauli_basis(), gellmann_basis()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Generator g = random_generator(rng, b);
      const ComplexMatrix h = g.hamiltonian();
      g = Generator(h - h.trace() / static_cast<double>(b->dim()) * ComplexMatrix::Identity(b->dim(), b->dim()),
                    g.gks());
      std::vector<Snapshot> snaps;
      for (double t : {1e-3, 2e-3, 3e-3, 4e-3}) snaps.push_back({t, exponentiate(g, t)});
      const Generator back = extract_generator(snaps, b);
      CHECK((back.gks().matrix() - g.gks().matrix()).cwiseAbs().maxCoeff() < 1e-6);
      CHECK((back.hamiltonian() - g.hamiltonian()).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("extract_generator rejects bad snapshots") {
  const std::vector<Snapshot> one{{0.1, phase_damping(1.0, 0.1)}};
  CHECK_THROWS_AS(extract_generator(one, pauli_basis()), Error);
  const std::vector<Snapshot> same{{0.1, phase_damping(1.0, 0.1)}, {0.1, phase_damping(1.0, 0.1)}};
  CHECK_THROWS_AS(extract_generator(same, pauli_basis()), Error);
  // Uniform shrinking loses trace, which no generator can do.
  const std::vector<Snapshot> bad{{0.1, Superoperator(2, 0.9 * ComplexMatrix::Identity(4, 4))},
                                  {0.2, Superoperator(2, 0.8 * ComplexMatrix::Identity(4, 4))}};
  try {
    extract_generator(bad, pauli_basis());
    FAIL("expected FitResidualTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FitResidualTooLarge);
  }
}

TEST_CASE("evolve examples") {
  const std::vector<double> times{0.0, 0.5, 1.0, 2.0, 4.0};
  const DensityMatrix rho0(state(0.3, Complex(0.1, 0.2), 0.7));
  for (const auto& r : evolve(Generator(GksMatrix::zero(pauli_basis())), rho0, times)) {
    CHECK((r.matrix() - rho0.matrix()).norm() == 0.0);
  }

  const double gamma = 0.7;
  const auto traj = evolve(qubit(ad(gamma)), DensityMatrix(state(0, 0, 1)), times);
  for (size_t i = 0; i < times.size(); ++i) {
    CHECK(std::abs(traj[i].matrix()(1, 1).real() - std::exp(-gamma * times[i])) < 1e-12);
  }

  const auto b = pauli_basis();
  const DensityMatrix start = DensityMatrix::from_bloch(*b, Eigen::Vector3d(0.3, -0.4, 0.5));
  const auto dtraj = evolve(qubit(dep(gamma)), start, times);
  for (size_t i = 0; i < times.size(); ++i) {
    const double r = bloch_vector(*b, dtraj[i].matrix()).norm();
    CHECK(std::abs(r - std::sqrt(0.5) * std::exp(-gamma * times[i])) < 1e-12);
  }

  const std::vector<double> backwards{1.0, 0.5};
  CHECK_THROWS_AS(evolve(qubit(ad(1.0)), start, backwards), Error);
}
