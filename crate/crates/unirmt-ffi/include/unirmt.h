/* C interface to the unirmt largest-root tests. */

#ifndef UNIRMT_H
#define UNIRMT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum UnirmtStatus {
  UNIRMT_STATUS_OK = 0,
  UNIRMT_STATUS_NULL_POINTER = 1,
  UNIRMT_STATUS_INVALID_ARGUMENT = 2,
  UNIRMT_STATUS_INVALID_DIMENSION = 3,
  UNIRMT_STATUS_RANK_DEFICIENT = 4,
  UNIRMT_STATUS_NOT_POSITIVE_DEFINITE = 5,
  UNIRMT_STATUS_ORTHOGONALITY_VIOLATION = 6,
  UNIRMT_STATUS_CALIBRATION_DOMAIN = 7,
  UNIRMT_STATUS_NO_ROOT = 8,
  UNIRMT_STATUS_SATURATED = 9,
  UNIRMT_STATUS_NON_CONVERGENCE = 10,
  UNIRMT_STATUS_INVALID_CONFIG = 11,
  UNIRMT_STATUS_IO = 12,
  UNIRMT_STATUS_PARSE = 13,
  UNIRMT_STATUS_INTERNAL = 14,
} UnirmtStatus;

/**
 * Which test produced a report.
 */
typedef enum UnirmtMethod {
  UNIRMT_METHOD_CCA = 0,
  UNIRMT_METHOD_MANOVA = 1,
  UNIRMT_METHOD_LIN_MODEL_LINEAR = 2,
  UNIRMT_METHOD_LIN_MODEL_INTRA_SUBJECT = 3,
  UNIRMT_METHOD_UNIFIED_OMEGA = 4,
} UnirmtMethod;

/**
 * Opaque handle to a Tracy-Widom distribution table.
 */
typedef struct UnirmtTw UnirmtTw;

/**
 * Flat test outcome. `lambda1` and `rescaled` are IEEE infinities in the
 * saturated (λ₁ = ∞) and zero-statistic (λ₁ = 0) regimes.
 */
typedef struct UnirmtReport {
  enum UnirmtMethod method;
  double lambda1;
  bool saturated;
  double rescaled;
  double p_value;
  double alpha;
  bool reject;
  uintptr_t m1;
  uintptr_t n1;
  uintptr_t n2;
  uintptr_t n;
} UnirmtReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *unirmt_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *unirmt_version(void);

/**
 * New handle to the embedded Tracy-Widom table. Free with
 * `unirmt_tw_free`.
 */
struct UnirmtTw *unirmt_tw_new_default(void);

/**
 * Loads a replacement table from a two-column CSV (abscissa, cdf).
 *
 * # Safety
 * `path` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum UnirmtStatus unirmt_tw_new_from_csv(const char *path, struct UnirmtTw **out);

/**
 * Frees a table handle; NULL is ignored.
 *
 * # Safety
 * `tw` must be NULL or a pointer obtained from this library.
 */
void unirmt_tw_free(struct UnirmtTw *tw);

/**
 * CDF of the type-1 Tracy-Widom law.
 *
 * # Safety
 * `tw` must be NULL (embedded table) or a live handle; `out` must be valid.
 */
enum UnirmtStatus unirmt_tw_cdf(const struct UnirmtTw *tw, double s, double *out);

/**
 * Quantile of the type-1 Tracy-Widom law (probability in (0, 1)).
 *
 * # Safety
 * `tw` must be NULL (embedded table) or a live handle; `out` must be valid.
 */
enum UnirmtStatus unirmt_tw_quantile(const struct UnirmtTw *tw, double p, double *out);

/**
 * Upper-tail probability 1 − cdf(s) of the type-1 Tracy-Widom law.
 *
 * # Safety
 * `tw` must be NULL (embedded table) or a live handle; `out` must be valid.
 */
enum UnirmtStatus unirmt_tw_pvalue(const struct UnirmtTw *tw, double s, double *out);

/**
 * Largest eigenvalue of (Z U₂U₂ᵀ Zᵀ)⁻¹ Z U₁U₁ᵀ Zᵀ.
 *
 * `z` is m1 x n, `u1` is n x n1, `u2` is n x n_minus_n2, all row-major;
 * the isometry conditions are verified.
 *
 * # Safety
 * All data pointers must reference arrays of the stated sizes; `out` must
 * be a valid pointer.
 */
enum UnirmtStatus unirmt_omega_lambda1(const double *z,
                                       uintptr_t m1,
                                       uintptr_t n,
                                       const double *u1,
                                       uintptr_t n1,
                                       const double *u2,
                                       uintptr_t n_minus_n2,
                                       double *out);

/**
 * Independence test; `z` is n x m1 and `y` is n x m2, observations in
 * rows. A saturated statistic is reported through the report, not as an
 * error.
 *
 * # Safety
 * Data pointers must reference arrays of the stated sizes; `out` must be
 * a valid pointer.
 */
enum UnirmtStatus unirmt_cca_test(const struct UnirmtTw *tw,
                                  const double *z,
                                  uintptr_t n,
                                  uintptr_t m1,
                                  const double *y,
                                  uintptr_t m2,
                                  double alpha,
                                  struct UnirmtReport *out);

/**
 * Equality-of-means test. `data` stacks all observations (n_total x p,
 * row-major) group by group; `group_sizes` lists the per-group counts.
 *
 * # Safety
 * Pointers must reference arrays of the stated sizes; `out` must be valid.
 */
enum UnirmtStatus unirmt_manova_test(const struct UnirmtTw *tw,
                                     const double *data,
                                     uintptr_t p,
                                     const uintptr_t *group_sizes,
                                     uintptr_t n_groups,
                                     double alpha,
                                     struct UnirmtReport *out);

/**
 * Linear (`d` NULL) or intra-subject (`d` = p2 x g2) hypothesis test in
 * the multivariate linear model. `gamma` may be NULL for a zero
 * hypothesized value.
 *
 * # Safety
 * Pointers must reference arrays of the stated sizes; `out` must be valid.
 */
enum UnirmtStatus unirmt_lm_test(const struct UnirmtTw *tw,
                                 const double *y,
                                 uintptr_t n,
                                 uintptr_t p2,
                                 const double *x,
                                 uintptr_t p1,
                                 const double *c,
                                 uintptr_t g1,
                                 const double *gamma,
                                 const double *d,
                                 uintptr_t g2,
                                 double alpha,
                                 struct UnirmtReport *out);

/**
 * Log-transform calibration parameters for a dimension tuple.
 *
 * # Safety
 * `mu_out` and `sigma_out` must be valid pointers.
 */
enum UnirmtStatus unirmt_log_rescale_params(uintptr_t m1,
                                            uintptr_t n1,
                                            uintptr_t n2,
                                            uintptr_t n,
                                            double *mu_out,
                                            double *sigma_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNIRMT_H */
