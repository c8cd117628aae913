/*
 * C interface to the qframe library: analysis of finite frames in right
 * quaternionic Hilbert spaces.
 *
 * Conventions:
 *   - A quaternion is four doubles [x0, x1, x2, x3] for x0 + x1 i + x2 j
 *     + x3 k.
 *   - A vector of dimension n is n consecutive quaternions (4n doubles).
 *   - A family of m vectors is m consecutive vectors (m*4n doubles).
 *   - Every fallible call returns qf_status; QF_OK is 0.  On failure,
 *     qf_last_error() returns a thread-local message describing it.
 */

#ifndef QFRAME_H
#define QFRAME_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QF_API __declspec(dllexport)
#else
#define QF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
  QF_OK = 0,
  QF_ERR_INVALID_ARGUMENT = 1,
  QF_ERR_INVALID_VALUE = 2,
  QF_ERR_DIMENSION_MISMATCH = 3,
  QF_ERR_ZERO_DIVISION = 4,
  QF_ERR_SINGULAR = 5,
  QF_ERR_NOT_SELF_ADJOINT = 6,
  QF_ERR_PAIRING_VIOLATION = 7,
  QF_ERR_STRUCTURE_VIOLATION = 8,
  QF_ERR_NOT_A_FRAME = 9,
  QF_ERR_NOT_A_REPRESENTATION = 10,
  QF_ERR_INVALID_SUBSPACE = 11,
  QF_ERR_SINGULAR_PROJECTED_FRAME = 12,
  QF_ERR_IO = 13,
  QF_ERR_SCHEMA = 14,
  QF_ERR_INTERNAL = 15
} qf_status;

/* Opaque frame handle; release with qf_frame_free. */
typedef struct qf_frame qf_frame;

/* Knobs shared by every analysis call.  tolerance gates all verdicts;
 * seed drives the probe vectors and perturbations used by residual
 * checks, so identical options reproduce identical reports. */
typedef struct qf_options {
  double tolerance;
  uint64_t seed;
} qf_options;

QF_API qf_options qf_default_options(void); /* { 1e-9, 0 } */

QF_API const char* qf_version(void);
QF_API const char* qf_status_name(qf_status status);

/* Message for the most recent failure on the calling thread.  Valid until
 * the next failing call on the same thread. */
QF_API const char* qf_last_error(void);

/* ---- construction and persistence ---- */

QF_API qf_status qf_frame_create(size_t dimension, size_t count,
                                 const double* components, qf_frame** out);
QF_API qf_status qf_frame_read(const char* path, qf_frame** out);
QF_API qf_status qf_frame_write(const qf_frame* frame, const char* path);

/* kind is one of "duplicated-basis", "random-frame", "orthonormal".
 * duplicated-basis yields the 2n-vector family {z1, z1, ..., zn, zn};
 * random-frame yields n + ceil(n/2) seeded vectors redrawn until the
 * frame-operator spectrum is well separated from zero; orthonormal yields
 * the coordinate basis.  Deterministic for fixed kind, dimension, seed. */
QF_API qf_status qf_frame_generate(const char* kind, size_t dimension,
                                   uint64_t seed, qf_frame** out);

QF_API void qf_frame_free(qf_frame* frame);

QF_API size_t qf_frame_dimension(const qf_frame* frame);
QF_API size_t qf_frame_count(const qf_frame* frame);
/* out must hold count * dimension * 4 doubles. */
QF_API qf_status qf_frame_components(const qf_frame* frame, double* out);
QF_API const char* qf_frame_label(const qf_frame* frame);
QF_API qf_status qf_frame_set_label(qf_frame* frame, const char* label);

/* ---- frame analysis ---- */

typedef struct qf_bounds {
  double lower; /* smallest frame-operator eigenvalue */
  double upper; /* largest frame-operator eigenvalue */
  int is_frame;
  int is_bessel;
  int is_tight;
  int is_parseval;
} qf_bounds;

QF_API qf_status qf_frame_bounds(const qf_frame* frame,
                                 const qf_options* options, qf_bounds* out);

QF_API qf_status qf_frame_canonical_dual(const qf_frame* frame,
                                         const qf_options* options,
                                         qf_frame** out);

/* Residuals of the four equivalent alternate-dual conditions; see the
 * library documentation.  coherent records that the four booleans agree
 * (guaranteed when both families are frames). */
typedef struct qf_dual_verdict {
  double reconstruction_residual;
  double synthesis_identity_residual;
  double analysis_identity_residual;
  double idempotency_residual;
  int reconstruction_ok;
  int synthesis_ok;
  int analysis_ok;
  int idempotency_ok;
  int coherent;
  int pass;
} qf_dual_verdict;

QF_API qf_status qf_verify_dual(const qf_frame* frame,
                                const qf_frame* candidate,
                                const qf_options* options,
                                qf_dual_verdict* out);

/* ---- coefficients ---- */

/* coefficients: count quaternions; vector: dimension quaternions. */
QF_API qf_status qf_synthesize(const qf_frame* frame,
                               const double* coefficients, double* out_vector);
QF_API qf_status qf_analyze(const qf_frame* frame, const double* vector,
                            double* out_coefficients);
QF_API qf_status qf_minimal_norm_coefficients(const qf_frame* frame,
                                              const double* vector,
                                              const qf_options* options,
                                              double* out_coefficients);

typedef struct qf_norm_identity {
  double coefficient_norm_sq;
  double minimal_norm_sq;
  double gap_norm_sq;
  double identity_residual;
  double orthogonality_residual;
} qf_norm_identity;

QF_API qf_status qf_norm_identity_check(const qf_frame* frame,
                                        const double* vector,
                                        const double* coefficients,
                                        const qf_options* options,
                                        qf_norm_identity* out);

typedef struct qf_norm_identity_sweep {
  qf_norm_identity worst;
  double worst_relative_identity;
  double worst_minimality_violation;
  size_t cases;
} qf_norm_identity_sweep;

QF_API qf_status qf_norm_identity_sweep_run(const qf_frame* frame,
                                            const qf_options* options,
                                            qf_norm_identity_sweep* out);

/* ---- coefficient-space projection ---- */

typedef struct qf_projection_report {
  double idempotency_residual;
  double self_adjointness_residual;
  double range_residual;
  double kernel_residual;
  double formula_residual;
  double trace_error;
  int pass;
} qf_projection_report;

/* q_components, when non-NULL, receives the count x count projection
 * matrix (count*count quaternions, row-major). */
QF_API qf_status qf_gram_projection(const qf_frame* frame,
                                    const qf_options* options,
                                    qf_projection_report* out,
                                    double* q_components);

/* ---- subspace projection ---- */

typedef struct qf_subspace_report {
  size_t subspace_dim;
  double projected_lower;
  double projected_upper;
  int projected_is_frame;
  int bounds_within;
  double alt_dual_residual;
  int alt_dual_ok;
  double commutator_residual;
  double dual_mismatch_residual;
  int commutes;
  int duals_match;
  int coherent;
  int pass;
} qf_subspace_report;

/* spanning provides any family whose span is the target subspace; it is
 * orthonormalized internally.  projected_out, when non-NULL, receives the
 * projected family as a new frame handle. */
QF_API qf_status qf_project_frame(const qf_frame* frame,
                                  const qf_frame* spanning,
                                  const qf_options* options,
                                  qf_frame** projected_out,
                                  qf_subspace_report* out);

#ifdef __cplusplus
}
#endif

#endif /* QFRAME_H */
