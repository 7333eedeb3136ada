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

#include "qmarkov/qmarkov.h"

#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qmarkov/adjoint.hpp"
#include "qmarkov/channel.hpp"
#include "qmarkov/decomposer.hpp"
#include "qmarkov/document.hpp"
#include "qmarkov/error.hpp"
#include "qmarkov/random.hpp"
#include "qmarkov/trotter.hpp"

using namespace qmarkov;

struct qm_generator {
  Generator g;
  std::string metadata;
  double raw_defect = 0.0;
};

struct qm_generator_list {
  std::vector<Generator> items;
};

struct qm_affine {
  AffineDocument doc;
};

struct qm_decomposition {
  std::vector<qm_term_info> terms;
  std::vector<Generator> generators;
  std::optional<AxisAngle> rotation;
  double residual = 0.0;
};

namespace {

thread_local std::string last_error;

qm_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return QM_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return QM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotHermitian: return QM_ERR_NOT_HERMITIAN;
    case ErrorCode::NotPsd: return QM_ERR_NOT_PSD;
    case ErrorCode::NotReal: return QM_ERR_NOT_REAL;
    case ErrorCode::NotUnitary: return QM_ERR_NOT_UNITARY;
    case ErrorCode::NotNormalized: return QM_ERR_NOT_NORMALIZED;
    case ErrorCode::BadAxis: return QM_ERR_BAD_AXIS;
    case ErrorCode::NegativeTime: return QM_ERR_NEGATIVE_TIME;
    case ErrorCode::NegativeRate: return QM_ERR_NEGATIVE_RATE;
    case ErrorCode::ConvergenceFailure: return QM_ERR_CONVERGENCE_FAILURE;
    case ErrorCode::UnsolvableSystem: return QM_ERR_UNSOLVABLE_SYSTEM;
    case ErrorCode::FitResidualTooLarge: return QM_ERR_FIT_RESIDUAL_TOO_LARGE;
    case ErrorCode::BasisMismatch: return QM_ERR_BASIS_MISMATCH;
    case ErrorCode::InternalInconsistency: return QM_ERR_INTERNAL_INCONSISTENCY;
    case ErrorCode::ModeMismatch: return QM_ERR_MODE_MISMATCH;
    case ErrorCode::ParseError: return QM_ERR_PARSE;
    case ErrorCode::IoError: return QM_ERR_IO;
  }
  return QM_ERR_UNKNOWN;
}

template <class F>
qm_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return QM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QM_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QM_ERR_UNKNOWN;
  } catch (...) {
    last_error = "unknown failure";
    return QM_ERR_UNKNOWN;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) raise(ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

BasisKind kind_of(qm_basis_kind k) {
  switch (k) {
    case QM_BASIS_PAULI: return BasisKind::Pauli;
    case QM_BASIS_GELLMANN: return BasisKind::GellMann;
  }
  raise(ErrorCode::InvalidArgument, "unknown basis kind");
}

qm_basis_kind kind_of(BasisKind k) {
  return k == BasisKind::Pauli ? QM_BASIS_PAULI : QM_BASIS_GELLMANN;
}

ComplexMatrix read(const qm_complex* p, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const qm_complex& z = p[i * cols + j];
      m(i, j) = Complex(z.re, z.im);
    }
  return m;
}

void write(const ComplexMatrix& m, qm_complex* p) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      p[i * m.cols() + j] = qm_complex{m(i, j).real(), m(i, j).imag()};
    }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qm_generator* wrap(const GeneratorDocument& doc) {
  const double defect = hermiticity_defect(doc.gks);
  return new qm_generator{to_generator(doc), doc.metadata, defect};
}

qm_term_info term_info(double weight, double theta, const Rotation3& r, double phase) {
  const AxisAngle aa = axis_angle(r);
  return qm_term_info{weight, theta, {aa.axis(0), aa.axis(1), aa.axis(2)}, aa.angle, phase};
}

double residual_of(const std::vector<Generator>& gens, const GksMatrix& a) {
  ComplexMatrix sum = ComplexMatrix::Zero(a.matrix().rows(), a.matrix().cols());
  for (const auto& g : gens) sum += g.gks().matrix();
  return (sum - a.matrix()).norm();
}

RealVector parse_bloch_list(const std::string& spec) {
  std::vector<double> values;
  const char* p = spec.data();
  const char* end = p + spec.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == ',')) ++p;
    if (p == end) break;
    double v = 0.0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) {
      raise(ErrorCode::InvalidArgument, "cannot read state '" + spec + "'");
    }
    values.push_back(v);
    p = next;
    while (p < end && *p == ' ') ++p;
    if (p < end && *p != ',') raise(ErrorCode::InvalidArgument, "cannot read state '" + spec + "'");
  }
  return Eigen::Map<RealVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

DensityMatrix state_from_spec(int dim, const std::string& spec, std::uint64_t seed) {
  if (dim != 2 && dim != 3) raise(ErrorCode::DimensionMismatch, "states are supported for N = 2 and 3");
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  if (spec == "ground") {
    rho(0, 0) = 1.0;
  } else if (spec == "excited") {
    rho(dim - 1, dim - 1) = 1.0;
  } else if (spec == "plus") {
    rho(0, 0) = rho(0, 1) = rho(1, 0) = rho(1, 1) = 0.5;
  } else if (spec == "maxmixed") {
    rho = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
  } else if (spec == "random") {
    Rng rng(seed);
    ComplexMatrix b(dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) b(i, j) = Complex(rng.normal(), rng.normal());
    rho = b * b.adjoint();
    rho /= rho.trace().real();
  } else {
    const BasisPtr basis = basis_for_dim(dim);
    const RealVector r = parse_bloch_list(spec);
    if (r.size() != basis->size()) {
      raise(ErrorCode::DimensionMismatch, "state '" + spec + "' needs " + std::to_string(basis->size()) +
                                              " Bloch coordinates");
    }
    return DensityMatrix::from_bloch(*basis, r);
  }
  return DensityMatrix(rho);
}

}  // namespace

extern "C" {

const char* qm_last_error(void) { return last_error.c_str(); }

const char* qm_status_name(qm_status status) {
  switch (status) {
    case QM_OK: return "ok";
    case QM_ERR_INVALID_ARGUMENT: return to_string(ErrorCode::InvalidArgument);
    case QM_ERR_DIMENSION_MISMATCH: return to_string(ErrorCode::DimensionMismatch);
    case QM_ERR_NOT_HERMITIAN: return to_string(ErrorCode::NotHermitian);
    case QM_ERR_NOT_PSD: return to_string(ErrorCode::NotPsd);
    case QM_ERR_NOT_REAL: return to_string(ErrorCode::NotReal);
    case QM_ERR_NOT_UNITARY: return to_string(ErrorCode::NotUnitary);
    case QM_ERR_NOT_NORMALIZED: return to_string(ErrorCode::NotNormalized);
    case QM_ERR_BAD_AXIS: return to_string(ErrorCode::BadAxis);
    case QM_ERR_NEGATIVE_TIME: return to_string(ErrorCode::NegativeTime);
    case QM_ERR_NEGATIVE_RATE: return to_string(ErrorCode::NegativeRate);
    case QM_ERR_CONVERGENCE_FAILURE: return to_string(ErrorCode::ConvergenceFailure);
    case QM_ERR_UNSOLVABLE_SYSTEM: return to_string(ErrorCode::UnsolvableSystem);
    case QM_ERR_FIT_RESIDUAL_TOO_LARGE: return to_string(ErrorCode::FitResidualTooLarge);
    case QM_ERR_BASIS_MISMATCH: return to_string(ErrorCode::BasisMismatch);
    case QM_ERR_INTERNAL_INCONSISTENCY: return to_string(ErrorCode::InternalInconsistency);
    case QM_ERR_MODE_MISMATCH: return to_string(ErrorCode::ModeMismatch);
    case QM_ERR_PARSE: return to_string(ErrorCode::ParseError);
    case QM_ERR_IO: return to_string(ErrorCode::IoError);
    case QM_ERR_UNKNOWN: break;
  }
  return "unknown error";
}

void qm_string_free(char* s) { std::free(s); }

qm_status qm_generator_create(qm_basis_kind basis, const qm_complex* gks,
                              const qm_complex* hamiltonian, qm_generator** out) {
  return guarded([&] {
    require(gks, "gks");
    require(out, "out");
    GeneratorDocument doc;
    doc.basis = kind_of(basis);
    doc.dim = basis_for(doc.basis)->dim();
    const int n = doc.dim * doc.dim - 1;
    doc.gks = read(gks, n, n);
    if (hamiltonian != nullptr) doc.hamiltonian = read(hamiltonian, doc.dim, doc.dim);
    *out = wrap(doc);
  });
}

qm_status qm_generator_load(const char* path, qm_generator** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(parse_generator_document(read_text_file(path)));
  });
}

qm_status qm_generator_parse(const char* text, qm_generator** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(parse_generator_document(text));
  });
}

void qm_generator_free(qm_generator* g) { delete g; }

int qm_generator_dim(const qm_generator* g) { return g ? g->g.dim() : 0; }

int qm_generator_size(const qm_generator* g) { return g ? g->g.basis().size() : 0; }

qm_basis_kind qm_generator_basis(const qm_generator* g) {
  return g ? kind_of(g->g.basis().kind()) : QM_BASIS_PAULI;
}

const char* qm_generator_metadata(const qm_generator* g) { return g ? g->metadata.c_str() : ""; }

qm_status qm_generator_gks(const qm_generator* g, qm_complex* out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    write(g->g.gks().matrix(), out);
  });
}

qm_status qm_generator_hamiltonian(const qm_generator* g, qm_complex* out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    write(g->g.hamiltonian(), out);
  });
}

qm_status qm_generator_to_json(const qm_generator* g, char** out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    *out = copy_string(dump(to_document(g->g, g->metadata)));
  });
}

qm_status qm_generator_check(const qm_generator* g, qm_check_report* out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    const GksMatrix& a = g->g.gks();
    const HermitianEigen eig = eig_hermitian(a.matrix());
    const Eigen::Index last = eig.values.size() - 1;
    out->valid = is_valid_gks(a) ? 1 : 0;
    out->hermiticity_defect = g->raw_defect;
    out->min_eigenvalue = eig.values(last);
    out->min_eigenvalue_index = static_cast<int>(last + 1);
    out->unital = is_unital(a) ? 1 : 0;
    out->unitality_residual = unitality_residuals(a).cwiseAbs().maxCoeff();
  });
}

qm_status qm_generator_gks_eigenvalues(const qm_generator* g, double* out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    const RealVector v = eig_hermitian(g->g.gks().matrix()).values;
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i);
  });
}

qm_status qm_document_kind_of(const char* path, qm_document_kind* out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = detect_document_kind(read_text_file(path)) == DocumentKind::Affine ? QM_DOCUMENT_AFFINE
                                                                              : QM_DOCUMENT_GKS;
  });
}

qm_status qm_generator_to_affine(const qm_generator* g, qm_affine** out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    AffineDocument doc;
    doc.dim = g->g.dim();
    doc.basis = g->g.basis().kind();
    doc.rep = to_affine(g->g);
    doc.metadata = g->metadata;
    *out = new qm_affine{std::move(doc)};
  });
}

qm_status qm_affine_create(qm_basis_kind basis, const double* l, const double* p, qm_affine** out) {
  return guarded([&] {
    require(l, "l");
    require(p, "p");
    require(out, "out");
    AffineDocument doc;
    doc.basis = kind_of(basis);
    doc.dim = basis_for(doc.basis)->dim();
    const int n = doc.dim * doc.dim - 1;
    doc.rep.l = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(l, n, n);
    doc.rep.p = Eigen::Map<const RealVector>(p, n);
    *out = new qm_affine{std::move(doc)};
  });
}

qm_status qm_affine_load(const char* path, qm_affine** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new qm_affine{parse_affine_document(read_text_file(path))};
  });
}

void qm_affine_free(qm_affine* a) { delete a; }

int qm_affine_size(const qm_affine* a) { return a ? static_cast<int>(a->doc.rep.p.size()) : 0; }

qm_status qm_affine_get(const qm_affine* a, double* l, double* p) {
  return guarded([&] {
    require(a, "affine");
    const RealMatrix& m = a->doc.rep.l;
    if (l != nullptr) {
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) l[i * m.cols() + j] = m(i, j);
    }
    if (p != nullptr) {
      for (Eigen::Index i = 0; i < a->doc.rep.p.size(); ++i) p[i] = a->doc.rep.p(i);
    }
  });
}

qm_status qm_affine_to_json(const qm_affine* a, char** out) {
  return guarded([&] {
    require(a, "affine");
    require(out, "out");
    *out = copy_string(dump(a->doc));
  });
}

qm_status qm_affine_to_generator(const qm_affine* a, qm_generator** out, int* psd, double* residual) {
  return guarded([&] {
    require(a, "affine");
    require(out, "out");
    const AffineInversion inv = from_affine(a->doc.rep, basis_for(a->doc.basis));
    if (psd != nullptr) *psd = inv.psd ? 1 : 0;
    if (residual != nullptr) *residual = inv.residual;
    *out = new qm_generator{inv.generator, a->doc.metadata, 0.0};
  });
}

qm_status qm_state_from_spec(int dim, const char* spec, uint64_t seed, qm_complex* rho_out) {
  return guarded([&] {
    require(spec, "spec");
    require(rho_out, "rho_out");
    write(state_from_spec(dim, spec, seed).matrix(), rho_out);
  });
}

qm_status qm_bloch_vector(qm_basis_kind basis, const qm_complex* rho, double* out) {
  return guarded([&] {
    require(rho, "rho");
    require(out, "out");
    const BasisPtr b = basis_for(kind_of(basis));
    const RealVector r = bloch_vector(*b, read(rho, b->dim(), b->dim()));
    for (Eigen::Index i = 0; i < r.size(); ++i) out[i] = r(i);
  });
}

qm_status qm_evolve(const qm_generator* g, const qm_complex* rho0, const double* times, size_t count,
                    qm_complex* rho_out) {
  return guarded([&] {
    require(g, "generator");
    require(rho0, "rho0");
    require(times, "times");
    require(rho_out, "rho_out");
    const int dim = g->g.dim();
    const DensityMatrix start(read(rho0, dim, dim));
    const auto states = evolve(g->g, start, std::span<const double>(times, count));
    for (size_t k = 0; k < states.size(); ++k) {
      write(states[k].matrix(), rho_out + k * static_cast<size_t>(dim * dim));
    }
  });
}

qm_status qm_decompose_general(const qm_generator* g, qm_decomposition** out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    if (g->g.basis().kind() != BasisKind::Pauli) {
      raise(ErrorCode::ModeMismatch, "the primitive decomposition is defined for qubit generators only");
    }
    const GksMatrix& a = g->g.gks();
    const PrimitiveDecomposition d = decompose_general(a);
    auto result = std::make_unique<qm_decomposition>();
    for (const auto& term : d.terms) {
      result->terms.push_back(
          term_info(term.weight, term.primitive.theta, term.primitive.rotation, term.primitive.phase));
      result->generators.push_back(realize_term(term));
    }
    result->residual = residual_of(result->generators, a);
    *out = result.release();
  });
}

qm_status qm_decompose_unital(const qm_generator* g, qm_decomposition** out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    if (g->g.basis().kind() != BasisKind::Pauli) {
      raise(ErrorCode::ModeMismatch, "unital mode needs a qubit generator");
    }
    const GksMatrix& a = g->g.gks();
    UnitalDecomposition d;
    try {
      d = decompose_unital(a);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotReal) {
        raise(ErrorCode::ModeMismatch, "unital mode needs a real GKS matrix; use general mode");
      }
      throw;
    }
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    const std::array<Rotation3, 3> axes{d.rotation * so3_rotation(Vector3::UnitY(), kHalfPi),
                                        d.rotation * so3_rotation(Vector3::UnitX(), kHalfPi),
                                        d.rotation};
    auto result = std::make_unique<qm_decomposition>();
    for (size_t k = 0; k < 3; ++k) result->terms.push_back(term_info(d.weights[k], 0.0, axes[k], 0.0));
    result->generators = unital_term_generators(d);
    result->rotation = axis_angle(d.rotation);
    result->residual = residual_of(result->generators, a);
    *out = result.release();
  });
}

void qm_decomposition_free(qm_decomposition* d) { delete d; }

size_t qm_decomposition_size(const qm_decomposition* d) { return d ? d->terms.size() : 0; }

qm_status qm_decomposition_term(const qm_decomposition* d, size_t i, qm_term_info* out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    if (i >= d->terms.size()) raise(ErrorCode::InvalidArgument, "term index out of range");
    *out = d->terms[i];
  });
}

qm_status qm_decomposition_rotation(const qm_decomposition* d, double axis[3], double* angle) {
  return guarded([&] {
    require(d, "decomposition");
    require(axis, "axis");
    require(angle, "angle");
    if (!d->rotation) raise(ErrorCode::ModeMismatch, "only unital decompositions carry a rotation");
    for (int k = 0; k < 3; ++k) axis[k] = d->rotation->axis(k);
    *angle = d->rotation->angle;
  });
}

double qm_decomposition_residual(const qm_decomposition* d) { return d ? d->residual : 0.0; }

qm_status qm_decomposition_generators(const qm_decomposition* d, qm_generator_list** out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    *out = new qm_generator_list{d->generators};
  });
}

qm_status qm_verify_canonical_uniqueness(double theta1, double theta2, int trials, uint64_t seed, int* ok) {
  return guarded([&] {
    require(ok, "ok");
    *ok = verify_canonical_uniqueness(theta1, theta2, trials, seed) ? 1 : 0;
  });
}

qm_status qm_primitive_split(const qm_generator* g, qm_generator_list** out) {
  return guarded([&] {
    require(g, "generator");
    require(out, "out");
    *out = new qm_generator_list{primitive_split(g->g)};
  });
}

void qm_generator_list_free(qm_generator_list* list) { delete list; }

size_t qm_generator_list_size(const qm_generator_list* list) { return list ? list->items.size() : 0; }

qm_status qm_generator_list_get(const qm_generator_list* list, size_t i, qm_generator** out) {
  return guarded([&] {
    require(list, "list");
    require(out, "out");
    if (i >= list->items.size()) raise(ErrorCode::InvalidArgument, "list index out of range");
    *out = new qm_generator{list->items[i], {}, 0.0};
  });
}

qm_status qm_trotter_evolve_state(const qm_generator_list* list, double t, size_t steps,
                                  const qm_complex* rho0, qm_complex* rho_out) {
  return guarded([&] {
    require(list, "list");
    require(rho0, "rho0");
    require(rho_out, "rho_out");
    if (list->items.empty()) raise(ErrorCode::InvalidArgument, "empty generator list");
    const int dim = list->items.front().dim();
    const DensityMatrix start(read(rho0, dim, dim));
    const Superoperator e = trotter_evolve(TrotterPlan{list->items, t, steps});
    write(e.apply(start.matrix()), rho_out);
  });
}

qm_status qm_trotter_profile(const qm_generator_list* list, double t, const size_t* steps, size_t count,
                             double* errors_out, double* slope) {
  return guarded([&] {
    require(list, "list");
    require(steps, "steps");
    require(errors_out, "errors_out");
    const auto points = convergence_profile(list->items, t, std::span<const size_t>(steps, count));
    for (size_t i = 0; i < points.size(); ++i) errors_out[i] = points[i].error;
    if (slope != nullptr) *slope = loglog_slope(points);
  });
}

}  // extern "C"
