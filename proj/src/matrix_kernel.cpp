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

#include "qmarkov/matrix_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

// Multiply column k by a phase so that its largest-magnitude entry is real
// and positive. Entries within a relative 1e-12 of the maximum count as
// tied and the first of them is used, so rounding noise cannot flip the
// choice between symmetric components.
void canonicalize_phase(ComplexMatrix& vectors, Eigen::Index k) {
  auto col = vectors.col(k);
  const double max_mag = col.cwiseAbs().maxCoeff();
  if (max_mag == 0.0) return;
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) >= max_mag * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  const Complex phase = std::conj(col(pivot)) / std::abs(col(pivot));
  col *= phase;
  col(pivot) = Complex(col(pivot).real(), 0.0);
}

bool lexicographically_greater(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() > b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() > b(i).imag();
  }
  return false;
}

}  // namespace

ComplexMatrix HermitianEigen::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    raise(ErrorCode::DimensionMismatch,
          std::string(what) + ": expected a nonempty square matrix, got " +
              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol) {
  require_square(m, "eig_hermitian");
  if (!all_finite(m)) raise(ErrorCode::InvalidArgument, "eig_hermitian: non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > tol * m.norm()) {
    raise(ErrorCode::NotHermitian,
          "eig_hermitian: ||m - m^dagger||_F = " + std::to_string(defect) +
              " exceeds tolerance");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::ConvergenceFailure, "eig_hermitian: eigensolver did not converge");
  }

  const Eigen::Index n = sym.rows();
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    canonicalize_phase(out.vectors, k);
  }

  // Within clusters of numerically equal eigenvalues, order the vectors
  // lexicographically so the output does not depend on solver internals.
  const double tie = 1e-12 * std::max(1.0, out.values.cwiseAbs().maxCoeff());
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && out.values(end - 1) - out.values(end) <= tie) ++end;
    if (end - begin > 1) {
      std::vector<Eigen::Index> order(static_cast<size_t>(end - begin));
      std::iota(order.begin(), order.end(), begin);
      std::vector<ComplexVector> cols;
      for (auto idx : order) cols.push_back(out.vectors.col(idx));
      std::vector<size_t> perm(cols.size());
      std::iota(perm.begin(), perm.end(), size_t{0});
      std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        return lexicographically_greater(cols[a], cols[b]);
      });
      RealVector vals = out.values.segment(begin, end - begin);
      for (size_t i = 0; i < perm.size(); ++i) {
        out.vectors.col(begin + static_cast<Eigen::Index>(i)) = cols[perm[i]];
        out.values(begin + static_cast<Eigen::Index>(i)) = vals(static_cast<Eigen::Index>(perm[i]));
      }
    }
    begin = end;
  }
  return out;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  require_square(m, "expm");
  const Eigen::Index n = m.rows();
  const double one_norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = one_norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const ComplexMatrix x = m * std::ldexp(1.0, -squarings);

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-18 * sum.norm()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  require_square(m, "is_psd");
  const double scale = std::max(1.0, m.norm());
  if (hermiticity_defect(m) > tol * scale) {
    raise(ErrorCode::NotHermitian, "is_psd: matrix is not Hermitian within tolerance");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::ConvergenceFailure, "is_psd: eigensolver did not converge");
  }
  return solver.eigenvalues()(0) >= -tol * scale;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  // Eigen storage is column-major, which is exactly column stacking.
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n) {
  if (v.size() != n * n) {
    raise(ErrorCode::DimensionMismatch, "unvec: vector length is not n^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

}  // namespace qmarkov
