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

#include <optional>
#include <string>

#include "qmarkov/channel.hpp"
#include "qmarkov/document.hpp"
#include "qmarkov/error.hpp"
#include "support.hpp"

using namespace qmarkov;
using namespace qmarkov::testing;

namespace {

std::optional<ErrorCode> code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kAmplitudeDamping = R"({
  // decay towards |0>
  "metadata": "amplitude damping",
  "dim": 2,
  "basis": "pauli",
  "gks": [[[0.25, 0], [0, -0.25], [0, 0]],
          [[0, 0.25], [0.25, 0], [0, 0]],
          [[0, 0], [0, 0], [0, 0]]]
})";

}  // namespace

TEST_CASE("parse a generator document") {
  const GeneratorDocument doc = parse_generator_document(kAmplitudeDamping);
  CHECK(doc.dim == 2);
  CHECK(doc.basis == BasisKind::Pauli);
  CHECK(doc.metadata == "amplitude damping");
  CHECK_FALSE(doc.hamiltonian.has_value());
  CHECK((doc.gks - amplitude_damping_gks(1.0).matrix()).norm() < 1e-15);
  CHECK(detect_document_kind(kAmplitudeDamping) == DocumentKind::Generator);

  const GeneratorDocument bare = parse_generator_document(
      R"({"dim": 2, "basis": "pauli", "gks": [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
          "hamiltonian": [[0.5, 0], [0, -0.5]]})");
  CHECK(bare.gks(0, 0) == Complex(1.0));
  REQUIRE(bare.hamiltonian.has_value());
  CHECK((*bare.hamiltonian - sigma(2) / 2.0).norm() == 0.0);
  CHECK(bare.metadata.empty());
}

TEST_CASE("parse errors name the location or the field") {
  const auto syntax = code_of([] { parse_generator_document("{\n  \"dim\": 2\n  \"basis\": \"pauli\"\n}"); });
  CHECK(syntax == ErrorCode::ParseError);
  const std::string where = message_of([] { parse_generator_document("{\n  \"dim\": 2\n  \"basis\": \"pauli\"\n}"); });
  CHECK(where.find("line 3") != std::string::npos);

  const std::string field = message_of(
      [] { parse_generator_document(R"({"dim": 2, "basis": "pauli", "gks": [[0,0,0],[0,0,[1]],[0,0,0]]})"); });
  CHECK(field.find("gks[1][2]") != std::string::npos);

  CHECK(code_of([] { parse_generator_document(R"({"dim": 3, "basis": "pauli", "gks": []})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_generator_document(R"({"dim": 2, "basis": "pauli", "gks": [[0,0],[0,0]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_generator_document(R"({"dim": 2, "basis": "other", "gks": []})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_generator_document(R"({"dim": 2, "basis": "pauli"})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_generator_document("[1, 2]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_text_file("/nonexistent/qmarkov.json"); }) == ErrorCode::IoError);
}

TEST_CASE("slightly non-Hermitian input is symmetrized, larger defects are rejected") {
  GeneratorDocument doc = parse_generator_document(kAmplitudeDamping);
  doc.gks(0, 1) += 1e-13;
  const Generator g = to_generator(doc);
  CHECK((g.gks().matrix() - g.gks().matrix().adjoint()).norm() == 0.0);
  doc.gks(0, 1) += 1e-3;
  CHECK(code_of([&] { to_generator(doc); }) == ErrorCode::NotHermitian);
}

TEST_CASE("dump and parse round trip") {
  Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const auto b = trial % 2 == 0 ? pauli_basis() : gellmann_basis();
    const Generator g(random_hermitian(rng, b->dim()), GksMatrix(b, random_psd(rng, b->size())));
    const GeneratorDocument doc = to_document(g, "trial " + std::to_string(trial));
    const std::string text = dump(doc);
    const GeneratorDocument back = parse_generator_document(text);
    CHECK(back.metadata == doc.metadata);
    CHECK(back.dim == doc.dim);
    CHECK((back.gks - doc.gks).norm() == 0.0);
    REQUIRE(back.hamiltonian.has_value());
    CHECK((*back.hamiltonian - *doc.hamiltonian).norm() == 0.0);
    CHECK(dump(back) == text);
  }
}

TEST_CASE("affine documents") {
  const AffineRep rep = to_affine(Generator(amplitude_damping_gks(1.0)));
  const AffineDocument doc{2, BasisKind::Pauli, rep, "ad"};
  const std::string text = dump(doc);
  CHECK(detect_document_kind(text) == DocumentKind::Affine);
  CHECK(text.find("\"representation\": \"affine\"") != std::string::npos);
  const AffineDocument back = parse_affine_document(text);
  CHECK((back.rep.l - rep.l).norm() == 0.0);
  CHECK((back.rep.p - rep.p).norm() == 0.0);
  CHECK(back.metadata == "ad");
  CHECK(code_of([&] { parse_generator_document(text); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_affine_document(kAmplitudeDamping); }) == ErrorCode::ParseError);
}

TEST_CASE("negative zero is written as zero") {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = Complex(-0.0, -0.0);
  const std::string text = dump(to_document(Generator(GksMatrix(pauli_basis(), a))));
  CHECK(text.find("-0") == std::string::npos);
}
