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

#include <optional>
#include <string>
#include <string_view>

#include "qmarkov/lindblad.hpp"

namespace qmarkov {

/// On-disk description of a generator. JSON (comments allowed):
///
///   {
///     "metadata": "amplitude damping, Gamma = 1",
///     "dim": 2,
///     "basis": "pauli",
///     "hamiltonian": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
///     "gks": [[[0.25, 0], [0, -0.25], [0, 0]], ...]
///   }
///
/// Matrices are arrays of rows; every entry is [re, im] (a bare number is
/// read as a real entry). "hamiltonian" and "metadata" are optional.
struct GeneratorDocument {
  int dim = 2;
  BasisKind basis = BasisKind::Pauli;
  std::optional<ComplexMatrix> hamiltonian;
  ComplexMatrix gks;
  std::string metadata;
};

/// Same conventions with "representation": "affine", a real matrix "L"
/// and a real vector "p" in generalized Bloch coordinates.
struct AffineDocument {
  int dim = 2;
  BasisKind basis = BasisKind::Pauli;
  AffineRep rep;
  std::string metadata;
};

enum class DocumentKind { Generator, Affine };

/// Reads the "representation" field ("gks" when absent).
DocumentKind detect_document_kind(std::string_view text);

// Parse failures throw ParseError naming the line/column or the offending
// field; unreadable files throw IoError.
GeneratorDocument parse_generator_document(std::string_view text);
AffineDocument parse_affine_document(std::string_view text);
std::string read_text_file(const std::string& path);

/// Symmetrizes the GKS matrix when its Hermiticity defect is at most 1e-10
/// (relative), otherwise throws NotHermitian.
Generator to_generator(const GeneratorDocument& doc);
GeneratorDocument to_document(const Generator& g, std::string metadata = {});

std::string dump(const GeneratorDocument& doc);
std::string dump(const AffineDocument& doc);

}  // namespace qmarkov
