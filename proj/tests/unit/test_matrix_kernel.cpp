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

#include "qmarkov/error.hpp"
#include "qmarkov/matrix_kernel.hpp"
#include "support.hpp"

using namespace qmarkov;
using namespace qmarkov::testing;

namespace {

ComplexMatrix appendix_c() {
  ComplexMatrix a = ComplexMatrix::Zero(8, 8);
  const Complex i(0, 1);
  a(3, 3) = a(4, 4) = a(5, 5) = a(6, 6) = 1.0;
  a(3, 6) = a(4, 5) = i;
  a(6, 3) = a(5, 4) = -i;
  return a;
}

ComplexMatrix ad_gks(double gamma) {
  ComplexMatrix a(3, 3);
  a << 1, Complex(0, -1), 0, Complex(0, 1), 1, 0, 0, 0, 0;
  return gamma / 4.0 * a;
}

ComplexMatrix random_unitary(Rng& rng, int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rng, n, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

}  // namespace

TEST_CASE("eig_hermitian on the identity") {
  const HermitianEigen e = eig_hermitian(ComplexMatrix::Identity(3, 3));
  CHECK((e.values - RealVector::Ones(3)).norm() < 1e-14);
}

TEST_CASE("eig_hermitian sorts descending and canonicalizes phases") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << 1.0, 3.0, 2.0;
  const HermitianEigen e = eig_hermitian(m);
  CHECK(e.values(0) == doctest::Approx(3.0));
  CHECK(e.values(1) == doctest::Approx(2.0));
  CHECK(e.values(2) == doctest::Approx(1.0));
  for (int k = 0; k < 3; ++k) {
    Eigen::Index big = 0;
    e.vectors.col(k).cwiseAbs().maxCoeff(&big);
    CHECK(std::abs(e.vectors(big, k).imag()) < 1e-15);
    CHECK(e.vectors(big, k).real() > 0.0);
  }
}

TEST_CASE("eig_hermitian of the degenerate qutrit example") {
  const RealVector v = eig_hermitian(appendix_c()).values;
  RealVector want = RealVector::Zero(8);
  want(0) = want(1) = 2.0;
  CHECK((v - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eig_hermitian of amplitude damping with Gamma = 2") {
  // The 2x2 block (1/2)[[1, -i], [i, 1]] has eigenvalues 1 and 0.
  const RealVector v = eig_hermitian(ad_gks(2.0)).values;
  CHECK(v(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v(1)) < 1e-14);
  CHECK(std::abs(v(2)) < 1e-14);
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const ComplexMatrix m = random_hermitian(rng, n);
    const HermitianEigen e = eig_hermitian(m);
    CHECK((e.reconstruct() - m).norm() <= 1e-12 * m.norm());
    CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(n, n)).norm() < 1e-12);
    for (int k = 1; k < n; ++k) CHECK(e.values(k) <= e.values(k - 1));
  }
}

TEST_CASE("eig_hermitian rejects bad input") {
  ComplexMatrix m(2, 2);
  m << 1, 2, 0, 1;
  CHECK_THROWS_AS(eig_hermitian(m), Error);
  m << 1, std::nan(""), std::nan(""), 1;
  CHECK_THROWS_AS(eig_hermitian(m), Error);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), Error);
}

TEST_CASE("expm of simple matrices") {
  CHECK((expm(ComplexMatrix::Zero(4, 4)) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);

  const double gt = 0.7;
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << -gt, -gt, 0.0;
  ComplexMatrix want = ComplexMatrix::Zero(3, 3);
  want.diagonal() << std::exp(-gt), std::exp(-gt), 1.0;
  CHECK((expm(d) - want).norm() < 1e-15);

  ComplexMatrix nil(2, 2);
  nil << 0, 1, 0, 0;
  ComplexMatrix jordan(2, 2);
  jordan << 1, 1, 0, 1;
  CHECK((expm(nil) - jordan).norm() < 1e-15);
}

TEST_CASE("expm of the phase damping superoperator") {
  // -i[0, .] + (gamma/2)(sigma_z . sigma_z - .) in column-stacked order
  // (rho00, rho10, rho01, rho11) is diag(0, -gamma, -gamma, 0).
  ComplexMatrix z = ComplexMatrix::Zero(4, 4);
  z.diagonal() << 0.0, -1.0, -1.0, 0.0;
  const ComplexMatrix e = expm(0.7 * z);
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  want.diagonal() << 1.0, std::exp(-0.7), std::exp(-0.7), 1.0;
  CHECK((e - want).norm() < 1e-15);
}

TEST_CASE("expm matches the spectral exponential of Hermitian arguments") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const ComplexMatrix h = random_hermitian(rng, n) * (1.0 + trial);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const ComplexVector phases = (es.eigenvalues().cast<Complex>() * Complex(0, -1)).array().exp();
    const ComplexMatrix want = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    CHECK((expm(Complex(0, -1) * h) - want).norm() < 1e-10);
  }
}

TEST_CASE("expm group properties") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 8;
    ComplexMatrix m = random_complex(rng, n, n);
    m *= rng.uniform(0.1, 10.0) / m.norm();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    CHECK((expm(m) * expm(-m) - id).norm() < 1e-10);
    const double s = rng.uniform(0.0, 1.0);
    const double t = rng.uniform(0.0, 1.0);
    CHECK((expm(s * m) * expm(t * m) - expm((s + t) * m)).norm() < 1e-10 * std::max(1.0, expm((s + t) * m).norm()));
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ad_gks(1.0)));
  CHECK(is_psd(appendix_c()));
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 1.0, -0.1, 0.0;
  CHECK_FALSE(is_psd(d));
  d.diagonal() << 1.0, -1e-13, 0.0;
  CHECK(is_psd(d));
}

TEST_CASE("is_psd is invariant under unitary conjugation") {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix psd = random_psd(rng, n);
    ComplexMatrix indefinite = random_hermitian(rng, n);
    indefinite -= (eig_hermitian(indefinite).values(n - 1) + 0.0) * ComplexMatrix::Identity(n, n);
    indefinite -= 0.05 * ComplexMatrix::Identity(n, n);
    CHECK(is_psd(psd) == is_psd(u * psd * u.adjoint()));
    CHECK_FALSE(is_psd(indefinite));
    CHECK_FALSE(is_psd(u * indefinite * u.adjoint()));
  }
}

TEST_CASE("commutators, Kronecker products and vectorization") {
  CHECK((commutator(sigma(0), sigma(1)) - Complex(0, 2) * sigma(2)).norm() < 1e-15);
  CHECK((anticommutator(sigma(0), sigma(0)) - 2.0 * ComplexMatrix::Identity(2, 2)).norm() < 1e-15);

  Rng rng(15);
  const ComplexMatrix a = random_complex(rng, 3, 3);
  const ComplexMatrix b = random_complex(rng, 3, 3);
  const ComplexMatrix x = random_complex(rng, 3, 3);
  CHECK((vec(a * x * b) - kron(b.transpose(), a) * vec(x)).norm() < 1e-12);
  CHECK((unvec(vec(x), 3) - x).norm() == 0.0);

  ComplexMatrix m(2, 2);
  m << 1, 2, 3, 4;
  const ComplexVector v = vec(m);
  CHECK(v(1) == Complex(3.0));  // entry (1, 0) lands at index 1
  CHECK(v(2) == Complex(2.0));
  CHECK_THROWS_AS(unvec(v, 3), Error);
}

TEST_CASE("hermiticity_defect") {
  ComplexMatrix m(2, 2);
  m << 1, Complex(0, 1), Complex(0, -1), 2;
  CHECK(hermiticity_defect(m) == 0.0);
  m(0, 1) = 1.0;
  CHECK(hermiticity_defect(m) > 0.1);
}
