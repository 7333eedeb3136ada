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

#ifndef QMARKOV_QMARKOV_H_
#define QMARKOV_QMARKOV_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QM_API __declspec(dllexport)
#else
#define QM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* All matrices crossing this interface are dense and row-major. A qubit
 * GKS matrix is 3x3, a qutrit one 8x8; Hamiltonians and density matrices
 * are N x N. Functions returning qm_status leave a message retrievable with
 * qm_last_error() (per thread) on failure. */

typedef enum qm_status {
  QM_OK = 0,
  QM_ERR_INVALID_ARGUMENT,
  QM_ERR_DIMENSION_MISMATCH,
  QM_ERR_NOT_HERMITIAN,
  QM_ERR_NOT_PSD,
  QM_ERR_NOT_REAL,
  QM_ERR_NOT_UNITARY,
  QM_ERR_NOT_NORMALIZED,
  QM_ERR_BAD_AXIS,
  QM_ERR_NEGATIVE_TIME,
  QM_ERR_NEGATIVE_RATE,
  QM_ERR_CONVERGENCE_FAILURE,
  QM_ERR_UNSOLVABLE_SYSTEM,
  QM_ERR_FIT_RESIDUAL_TOO_LARGE,
  QM_ERR_BASIS_MISMATCH,
  QM_ERR_INTERNAL_INCONSISTENCY,
  QM_ERR_MODE_MISMATCH,
  QM_ERR_PARSE,
  QM_ERR_IO,
  QM_ERR_UNKNOWN
} qm_status;

typedef enum qm_basis_kind { QM_BASIS_PAULI = 0, QM_BASIS_GELLMANN = 1 } qm_basis_kind;

typedef enum qm_document_kind { QM_DOCUMENT_GKS = 0, QM_DOCUMENT_AFFINE = 1 } qm_document_kind;

typedef struct qm_complex {
  double re;
  double im;
} qm_complex;

typedef struct qm_generator qm_generator;
typedef struct qm_generator_list qm_generator_list;
typedef struct qm_affine qm_affine;
typedef struct qm_decomposition qm_decomposition;

QM_API const char* qm_last_error(void);
QM_API const char* qm_status_name(qm_status status);
QM_API void qm_string_free(char* s);

/* ---- generators ---------------------------------------------------------- */

/* hamiltonian may be NULL (zero). */
QM_API qm_status qm_generator_create(qm_basis_kind basis, const qm_complex* gks,
                                     const qm_complex* hamiltonian, qm_generator** out);
QM_API qm_status qm_generator_load(const char* path, qm_generator** out);
QM_API qm_status qm_generator_parse(const char* text, qm_generator** out);
QM_API void qm_generator_free(qm_generator* g);

QM_API int qm_generator_dim(const qm_generator* g);
/* Number of basis elements, N^2 - 1. */
QM_API int qm_generator_size(const qm_generator* g);
QM_API qm_basis_kind qm_generator_basis(const qm_generator* g);
QM_API const char* qm_generator_metadata(const qm_generator* g);
QM_API qm_status qm_generator_gks(const qm_generator* g, qm_complex* out);
QM_API qm_status qm_generator_hamiltonian(const qm_generator* g, qm_complex* out);
/* Serialized as a GKS document; free with qm_string_free. */
QM_API qm_status qm_generator_to_json(const qm_generator* g, char** out);

typedef struct qm_check_report {
  int valid;                  /* GKS matrix positive semidefinite */
  double hermiticity_defect;  /* of the matrix as written in the source */
  double min_eigenvalue;
  int min_eigenvalue_index;   /* 1-based, eigenvalues sorted descending */
  int unital;
  double unitality_residual;  /* max_c |sum_{a<b} Im(a_ab) f_abc| */
} qm_check_report;

QM_API qm_status qm_generator_check(const qm_generator* g, qm_check_report* out);
/* Eigenvalues of the GKS matrix in descending order (size() of them). */
QM_API qm_status qm_generator_gks_eigenvalues(const qm_generator* g, double* out);

/* ---- affine representation ---------------------------------------------- */

QM_API qm_status qm_document_kind_of(const char* path, qm_document_kind* out);

QM_API qm_status qm_generator_to_affine(const qm_generator* g, qm_affine** out);
QM_API qm_status qm_affine_create(qm_basis_kind basis, const double* l, const double* p,
                                  qm_affine** out);
QM_API qm_status qm_affine_load(const char* path, qm_affine** out);
QM_API void qm_affine_free(qm_affine* a);
QM_API int qm_affine_size(const qm_affine* a);
QM_API qm_status qm_affine_get(const qm_affine* a, double* l, double* p);
QM_API qm_status qm_affine_to_json(const qm_affine* a, char** out);
/* psd and residual may be NULL. */
QM_API qm_status qm_affine_to_generator(const qm_affine* a, qm_generator** out, int* psd,
                                        double* residual);

/* ---- states and evolution ------------------------------------------------ */

/* spec: "ground" (|0>), "excited" (|N-1>), "plus" ((|0> + |1>)/sqrt2),
 * "maxmixed", "random" (seeded mixed state) or comma-separated generalized
 * Bloch coordinates. rho_out holds N*N entries. */
QM_API qm_status qm_state_from_spec(int dim, const char* spec, uint64_t seed, qm_complex* rho_out);
QM_API qm_status qm_bloch_vector(qm_basis_kind basis, const qm_complex* rho, double* out);

/* rho_out holds count * N * N entries, one state per time. */
QM_API qm_status qm_evolve(const qm_generator* g, const qm_complex* rho0, const double* times,
                           size_t count, qm_complex* rho_out);

/* ---- decomposition -------------------------------------------------------- */

typedef struct qm_term_info {
  double weight;
  double theta;
  double axis[3];  /* rotation as axis-angle, angle in [0, pi] */
  double angle;
  double phase;
} qm_term_info;

QM_API qm_status qm_decompose_general(const qm_generator* g, qm_decomposition** out);
/* Requires a real qubit GKS matrix, else QM_ERR_MODE_MISMATCH. Terms are
 * the three rotated phase-damping pieces (theta = 0, phase = 0). */
QM_API qm_status qm_decompose_unital(const qm_generator* g, qm_decomposition** out);
QM_API void qm_decomposition_free(qm_decomposition* d);
QM_API size_t qm_decomposition_size(const qm_decomposition* d);
QM_API qm_status qm_decomposition_term(const qm_decomposition* d, size_t i, qm_term_info* out);
/* Unital decompositions only: the diagonalizing rotation O. */
QM_API qm_status qm_decomposition_rotation(const qm_decomposition* d, double axis[3], double* angle);
/* Frobenius distance between the GKS matrix and the sum of the realized
 * term generators. */
QM_API double qm_decomposition_residual(const qm_decomposition* d);
QM_API qm_status qm_decomposition_generators(const qm_decomposition* d, qm_generator_list** out);

QM_API qm_status qm_verify_canonical_uniqueness(double theta1, double theta2, int trials,
                                                uint64_t seed, int* ok);

/* ---- Trotterization ------------------------------------------------------- */

QM_API qm_status qm_primitive_split(const qm_generator* g, qm_generator_list** out);
QM_API void qm_generator_list_free(qm_generator_list* list);
QM_API size_t qm_generator_list_size(const qm_generator_list* list);
/* Returns a new handle the caller owns. */
QM_API qm_status qm_generator_list_get(const qm_generator_list* list, size_t i, qm_generator** out);

QM_API qm_status qm_trotter_evolve_state(const qm_generator_list* list, double t, size_t steps,
                                         const qm_complex* rho0, qm_complex* rho_out);
/* errors_out[i] is the Frobenius distance between the steps[i]-step product
 * and the exact channel of the summed generator at time t. */
QM_API qm_status qm_trotter_profile(const qm_generator_list* list, double t, const size_t* steps,
                                    size_t count, double* errors_out, double* slope);

#ifdef __cplusplus
}
#endif

#endif  // QMARKOV_QMARKOV_H_
