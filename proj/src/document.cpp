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

#include "qmarkov/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  raise(ErrorCode::ParseError, "field '" + field + "': " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..." in what().
    raise(ErrorCode::ParseError, e.what());
  }
}

const json& require(const json& doc, const char* field) {
  if (!doc.is_object()) raise(ErrorCode::ParseError, "document root must be an object");
  auto it = doc.find(field);
  if (it == doc.end()) field_error(field, "missing");
  return *it;
}

double read_real(const json& v, const std::string& where) {
  if (!v.is_number()) field_error(where, "expected a number");
  return v.get<double>();
}

Complex read_complex(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    field_error(where, "expected [re, im]");
  }
  return Complex(v[0].get<double>(), v[1].get<double>());
}

ComplexMatrix read_complex_matrix(const json& v, const std::string& field, int rows, int cols) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) {
    field_error(field, "expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string row = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols) {
      field_error(row, "expected " + std::to_string(cols) + " entries");
    }
    for (int j = 0; j < cols; ++j) {
      m(i, j) = read_complex(v[i][j], row + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

RealMatrix read_real_matrix(const json& v, const std::string& field, int rows, int cols) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) {
    field_error(field, "expected " + std::to_string(rows) + " rows");
  }
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string row = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols) {
      field_error(row, "expected " + std::to_string(cols) + " entries");
    }
    for (int j = 0; j < cols; ++j) m(i, j) = read_real(v[i][j], row + "[" + std::to_string(j) + "]");
  }
  return m;
}

std::string number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0.0" in documents
  return json(v).dump();
}

std::string complex_matrix_text(const ComplexMatrix& m) {
  std::string out = "[\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += "[" + number(m(i, j).real()) + ", " + number(m(i, j).imag()) + "]";
    }
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  return out + "  ]";
}

std::string real_matrix_text(const RealMatrix& m) {
  std::string out = "[\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j > 0 ? ", " : "") + number(m(i, j));
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  return out + "  ]";
}

std::string header_text(const std::string& metadata, const char* representation, int dim, BasisKind basis) {
  std::string out = "{\n";
  if (!metadata.empty()) out += "  \"metadata\": " + json(metadata).dump() + ",\n";
  out += std::string("  \"representation\": \"") + representation + "\",\n";
  out += "  \"dim\": " + std::to_string(dim) + ",\n";
  out += "  \"basis\": \"" + std::string(to_string(basis)) + "\",\n";
  return out;
}

std::string read_metadata(const json& doc) {
  auto it = doc.find("metadata");
  if (it == doc.end()) return {};
  return it->is_string() ? it->get<std::string>() : it->dump();
}

void read_header(const json& doc, int& dim, BasisKind& basis) {
  const json& d = require(doc, "dim");
  if (!d.is_number_integer()) field_error("dim", "expected an integer");
  dim = d.get<int>();
  const json& b = require(doc, "basis");
  if (!b.is_string()) field_error("basis", "expected \"pauli\" or \"gellmann\"");
  try {
    basis = basis_kind_from_string(b.get<std::string>());
  } catch (const Error&) {
    field_error("basis", "unknown basis \"" + b.get<std::string>() + "\"");
  }
  const int expected = basis == BasisKind::Pauli ? 2 : 3;
  if (dim != expected) {
    field_error("dim", "basis " + std::string(to_string(basis)) + " needs dim " +
                           std::to_string(expected) + ", got " + std::to_string(dim));
  }
}

}  // namespace

DocumentKind detect_document_kind(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) raise(ErrorCode::ParseError, "document root must be an object");
  auto it = doc.find("representation");
  if (it == doc.end()) return DocumentKind::Generator;
  if (!it->is_string()) field_error("representation", "expected a string");
  const auto rep = it->get<std::string>();
  if (rep == "gks") return DocumentKind::Generator;
  if (rep == "affine") return DocumentKind::Affine;
  field_error("representation", "unknown representation \"" + rep + "\"");
}

GeneratorDocument parse_generator_document(std::string_view text) {
  if (detect_document_kind(text) != DocumentKind::Generator) {
    raise(ErrorCode::ParseError, "expected a GKS document, found an affine one");
  }
  const json doc = parse_json(text);
  GeneratorDocument out;
  read_header(doc, out.dim, out.basis);
  const int n = out.dim * out.dim - 1;
  out.gks = read_complex_matrix(require(doc, "gks"), "gks", n, n);
  if (auto it = doc.find("hamiltonian"); it != doc.end() && !it->is_null()) {
    out.hamiltonian = read_complex_matrix(*it, "hamiltonian", out.dim, out.dim);
  }
  out.metadata = read_metadata(doc);
  return out;
}

AffineDocument parse_affine_document(std::string_view text) {
  if (detect_document_kind(text) != DocumentKind::Affine) {
    raise(ErrorCode::ParseError, "expected an affine document, found a GKS one");
  }
  const json doc = parse_json(text);
  AffineDocument out;
  read_header(doc, out.dim, out.basis);
  const int n = out.dim * out.dim - 1;
  out.rep.l = read_real_matrix(require(doc, "L"), "L", n, n);
  const json& p = require(doc, "p");
  if (!p.is_array() || static_cast<int>(p.size()) != n) {
    field_error("p", "expected " + std::to_string(n) + " entries");
  }
  out.rep.p.resize(n);
  for (int i = 0; i < n; ++i) out.rep.p(i) = read_real(p[i], "p[" + std::to_string(i) + "]");
  out.metadata = read_metadata(doc);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) raise(ErrorCode::IoError, "failed reading '" + path + "'");
  return ss.str();
}

Generator to_generator(const GeneratorDocument& doc) {
  const BasisPtr basis = basis_for(doc.basis);
  const ComplexMatrix& a = doc.gks;
  const double defect = hermiticity_defect(a);
  if (defect > 1e-10 * std::max(1.0, a.norm())) {
    raise(ErrorCode::NotHermitian,
          "GKS matrix is not Hermitian (||a - a^dagger||_F = " + std::to_string(defect) + ")");
  }
  GksMatrix gks = GksMatrix(basis, a).symmetrized();
  if (doc.hamiltonian) return Generator(*doc.hamiltonian, std::move(gks));
  return Generator(std::move(gks));
}

GeneratorDocument to_document(const Generator& g, std::string metadata) {
  GeneratorDocument doc;
  doc.dim = g.dim();
  doc.basis = g.basis().kind();
  doc.gks = g.gks().matrix();
  doc.hamiltonian = g.hamiltonian();
  doc.metadata = std::move(metadata);
  return doc;
}

std::string dump(const GeneratorDocument& doc) {
  std::string out = header_text(doc.metadata, "gks", doc.dim, doc.basis);
  if (doc.hamiltonian) out += "  \"hamiltonian\": " + complex_matrix_text(*doc.hamiltonian) + ",\n";
  out += "  \"gks\": " + complex_matrix_text(doc.gks) + "\n}\n";
  return out;
}

std::string dump(const AffineDocument& doc) {
  std::string out = header_text(doc.metadata, "affine", doc.dim, doc.basis);
  out += "  \"L\": " + real_matrix_text(doc.rep.l) + ",\n";
  out += "  \"p\": [";
  for (Eigen::Index i = 0; i < doc.rep.p.size(); ++i) out += (i > 0 ? ", " : "") + number(doc.rep.p(i));
  out += "]\n}\n";
  return out;
}

}  // namespace qmarkov
