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

// Writes the bundled generator documents into a directory:
//   make_fixtures <out-dir>
// Output is a pure function of the fixed seed below.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "qmarkov/channel.hpp"
#include "qmarkov/document.hpp"
#include "qmarkov/random.hpp"

namespace {

using namespace qmarkov;
namespace fs = std::filesystem;

constexpr std::uint64_t kSeed = 20260101;
constexpr int kRandomCount = 50;

void write(const fs::path& path, const std::string& comment, const GeneratorDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  out << "// " << comment << "\n" << dump(doc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

GeneratorDocument qubit_doc(const GksMatrix& a, std::string label) {
  GeneratorDocument doc;
  doc.dim = 2;
  doc.basis = BasisKind::Pauli;
  doc.gks = a.matrix();
  doc.metadata = std::move(label);
  return doc;
}

GeneratorDocument appendix_c() {
  GeneratorDocument doc;
  doc.dim = 3;
  doc.basis = BasisKind::GellMann;
  doc.gks = ComplexMatrix::Zero(8, 8);
  doc.gks(3, 3) = doc.gks(4, 4) = doc.gks(5, 5) = doc.gks(6, 6) = 1.0;
  doc.gks(3, 6) = doc.gks(4, 5) = kI;
  doc.gks(6, 3) = doc.gks(5, 4) = -kI;
  doc.metadata = "unital qutrit process with complex GKS matrix, eigenvalues 2, 2, 0 x 6";
  return doc;
}

GeneratorDocument random_doc(Rng& rng, int k) {
  const int rank = 1 + k % 3;
  ComplexMatrix b(3, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < 3; ++i) b(i, j) = Complex(rng.normal(), rng.normal());
  ComplexMatrix a = b * b.adjoint();
  a *= rng.uniform(0.2, 2.0) / a.trace().real();

  GeneratorDocument doc = qubit_doc(GksMatrix(pauli_basis(), a), "random valid qubit generator #" +
                                                                     std::to_string(k) + ", rank " +
                                                                     std::to_string(rank));
  if (k % 5 != 0) {
    const double hx = 0.5 * rng.normal();
    const double hy = 0.5 * rng.normal();
    const double hz = 0.5 * rng.normal();
    ComplexMatrix h(2, 2);
    h << hz, Complex(hx, -hy), Complex(hx, hy), -hz;
    doc.hamiltonian = h;
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <out-dir>\n";
    return 2;
  }
  try {
    const fs::path dir = argv[1];
    fs::create_directories(dir / "random");
    write(dir / "phase_damping.json", "phase damping about z, gamma = 1",
          qubit_doc(phase_damping_gks(1.0), "phase damping, gamma = 1"));
    write(dir / "depolarizing.json", "depolarizing, gamma~ = 1",
          qubit_doc(depolarizing_gks(1.0), "depolarizing, gamma~ = 1"));
    write(dir / "amplitude_damping.json", "amplitude damping toward |0>, Gamma = 1",
          qubit_doc(amplitude_damping_gks(1.0), "amplitude damping, Gamma = 1"));
    write(dir / "appendix_c.json", "Gell-Mann basis example with a complex yet unital GKS matrix",
          appendix_c());
    Rng rng(kSeed);
    for (int k = 0; k < kRandomCount; ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "random_%02d.json", k);
      write(dir / "random" / name, "randomized valid qubit generator, seed " + std::to_string(kSeed),
            random_doc(rng, k));
    }
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
